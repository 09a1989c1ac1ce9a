#pragma once

#include <vector>

#include "surfcat/modules.hpp"
#include "surfcat/objects.hpp"

namespace surfcat {

// Closed interval of vertex positions of a string.
struct Interval {
  int begin = 0;
  int end = 0;
  int length() const { return end - begin; }
  auto operator<=>(const Interval&) const = default;
};

// A factor string of the source paired with an equal substring of the target.
struct GraphMap {
  Interval factor;
  Interval sub;
  bool inverted = false;
};

struct GraphMapBasis {
  std::vector<GraphMap> maps;
};

struct HomJ {
  int dim = 0;
  GraphMapBasis basis;
};

// Quotient intervals: boundary letters leave the interval.
std::vector<Interval> factor_intervals(const StringWord& w);
// Submodule intervals: boundary letters enter the interval.
std::vector<Interval> sub_intervals(const StringWord& w);

HomJ hom_j(const GentleAlgebra& A, const StringWord& w, const StringWord& v);
inline int hom_j_dim(const GentleAlgebra& A, const StringWord& w, const StringWord& v) { return hom_j(A, w, v).dim; }

// direction -1: tau inverse (non-injective), +1: tau (non-projective).
StringWord tau_j(const ModelPtr& m, const StringWord& w, int direction);

int hom_c_dim(const ObjectC& x, const ObjectC& y);
int ext1_c_dim(const ObjectC& x, const ObjectC& y);
bool is_rigid(const ObjectC& x);

// 0 -> M(left) -> middle -> M(right) -> 0 over the triangulation reached by
// flips_used, or, when one side is an arc there, an exchange certificate.
struct ExtWitness {
  ModelPtr model;
  std::vector<ArcId> flips_used;
  ObjectC left;
  std::vector<ObjectC> middle;
  ObjectC right;
  ExactnessReport report;
};

ExtWitness smooth_crossing(const ObjectC& x, const ObjectC& y);
ExtWitness resolve_self_crossing(const ObjectC& x);

}  // namespace surfcat
