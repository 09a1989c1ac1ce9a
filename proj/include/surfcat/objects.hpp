#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfcat/curve.hpp"
#include "surfcat/modules.hpp"

namespace surfcat {

// Indecomposable object of the cluster category, drawn on a reference triangulation.
// Arcs and string objects keep their curve (with a direction); the word of a
// string object is read off the curve.
struct ObjectC {
  enum class Kind { Zero, Arc, String, Band };

  ModelPtr model;
  Kind kind = Kind::Zero;
  Curve curve;
  Band band;
  int n = 0;
  Rational lambda{0};

  bool is_zero() const { return kind == Kind::Zero; }
  ArcId arc() const;
  StringWord word() const;
  // Marked points at the two ends (arcs and strings).
  int start_point() const;
  int end_point() const;
};

ObjectC zero_object(ModelPtr m);
ObjectC arc_object(ModelPtr m, ArcId id);
ObjectC string_object(ModelPtr m, const StringWord& w);
ObjectC band_object(ModelPtr m, const Band& b, int n, const Rational& lambda);
// Zero for contractible curves and boundary segments, Arc for sides of the
// triangulation, String otherwise.
ObjectC object_of_curve(ModelPtr m, const Curve& c);

// `zero`, `arc:5`, `w:4,-7,2@(m3,m8)`, `triv:4`, `band:3,-1,4;n=1;l=1/2`
ObjectC parse_object(ModelPtr m, const std::string& text);
std::string format(const ObjectC& x);

ObjectC pivot_start(const ObjectC& x);
ObjectC pivot_end(const ObjectC& x);
// k = -1 moves both ends clockwise, k = +1 counterclockwise.
ObjectC shift(const ObjectC& x, int k);

struct ARTriangle {
  ObjectC source;
  std::vector<ObjectC> middle;
  ObjectC target;
};
ARTriangle ar_triangle(const ObjectC& x);

struct Component {
  enum class Kind { BoundaryTube, HomogeneousTube, TwoMiddleTerm };
  Kind kind = Kind::TwoMiddleTerm;
  int boundary = -1;  // index into Triangulation::boundary_components
  int rank = 0;
  ArcId segment = 0;  // boundary arc whose end pivots reach the object
  int level = 0;      // number of end pivots
};
Component component_classify(const ObjectC& x);
// The boundary segment as a curve running clockwise.
Curve boundary_curve(const Triangulation& t, ArcId boundary_arc);

bool object_equal(const ObjectC& x, const ObjectC& y);
// Comparable key: equal objects get equal keys.
std::string object_key(const ObjectC& x);

Representation<Rational> module_of(const ObjectC& x);

// Arcs of the triangulation and canonical string objects with at most max_len letters.
std::vector<ObjectC> enumerate_objects(ModelPtr m, int max_len);

ObjectC transport_object(ModelPtr after, const Triangulation& before, const FlipResult& fr, const ObjectC& x);

}  // namespace surfcat
