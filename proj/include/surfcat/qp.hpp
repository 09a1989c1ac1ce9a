#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surfcat/surface.hpp"

namespace surfcat {

struct Arrow {
  int id = 0;
  ArcId source = 0;
  ArcId target = 0;
};

struct Quiver {
  std::vector<ArcId> vertices;
  std::vector<Arrow> arrows;

  bool has_arrow(int id) const;
  const Arrow& arrow(int id) const;
  std::vector<std::vector<int>> count_matrix() const;
  int vertex_index(ArcId v) const;
};

// Each cycle lists arrows in composition order, rotated so the smallest id comes first.
struct Potential {
  std::vector<std::array<int, 3>> cycles;
};

// (first, second) with target(first) = source(second): the composite is zero.
struct GentleRelations {
  std::set<std::pair<int, int>> forbidden_pairs;
  bool forbids(int first, int second) const { return forbidden_pairs.count({first, second}) > 0; }
};

// Where an arrow lives: the triangle corner it turns around and the two sides it joins.
struct ArrowPlacement {
  Corner corner;
  Slot source_slot;
  Slot target_slot;
};

struct QuiverWithPotential {
  Quiver quiver;
  Potential potential;
  GentleRelations relations;
  std::map<int, ArrowPlacement> placement;
};

QuiverWithPotential qp_from_triangulation(const Triangulation& t);

struct GentleReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

GentleReport check_gentle(const Quiver& q, const GentleRelations& rel);

Quiver quiver_mutate_fz(const Quiver& q, ArcId v);

// Same vertices and same arrow multiset after renaming vertices with `rename`.
bool same_arrows(const Quiver& a, const Quiver& b, const std::map<ArcId, ArcId>& rename = {});

// Vertex bijection a -> b carrying arrows onto arrows, found by backtracking.
std::optional<std::map<ArcId, ArcId>> find_isomorphism(const Quiver& a, const Quiver& b);

bool is_acyclic(const Quiver& q);

std::string to_dot(const QuiverWithPotential& qp);

}  // namespace surfcat
