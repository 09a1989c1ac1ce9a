#pragma once

#include <compare>
#include <map>
#include <memory>
#include <vector>

#include "surfcat/strings.hpp"
#include "surfcat/surface.hpp"

namespace surfcat {

// A triangulation together with its gentle algebra and the reverse arrow lookup.
struct Model {
  Triangulation tri;
  GentleAlgebra alg;
  std::map<Corner, int> arrow_at;  // corner -> arrow turning around it

  explicit Model(Triangulation t);
};

using ModelPtr = std::shared_ptr<const Model>;
ModelPtr make_model(Triangulation t);

// A curve between marked points, up to homotopy, recorded by the sides it
// crosses. crossings[i] is the slot through which the curve leaves its i-th
// triangle; start and end are the corners holding the endpoints. With no
// crossings both corners lie in one triangle.
struct Curve {
  Corner start;
  std::vector<Slot> crossings;
  Corner end;

  auto operator<=>(const Curve&) const = default;
};

// Closed curve: cyclic list of exit slots.
struct ClosedCurve {
  std::vector<Slot> crossings;
};

// Shortest representative: removes immediate returns through the same side and
// crossings of a side at one of its own endpoints.
Curve reduce(const Triangulation& t, Curve c);
ClosedCurve reduce(const Triangulation& t, ClosedCurve c);

Curve reverse(const Triangulation& t, const Curve& c);
// Along side s from its start corner to its end corner.
Curve side_curve(Slot s);
// Corner adjacent to c on the other side of slot s (c must be an endpoint of s).
Corner across(const Triangulation& t, Slot s, Corner c);

int start_point(const Triangulation& t, const Curve& c);
int end_point(const Triangulation& t, const Curve& c);

// A reduced curve without crossings is a side of its triangle; which one.
Slot side_of(const Curve& c);
// Contractible: no crossings and both endpoints in the same corner.
bool is_contractible(const Curve& c);

Curve curve_of_word(const Model& m, const StringWord& w);
// Curve must have at least one crossing.
StringWord word_of_curve(const Model& m, const Curve& c);
ClosedCurve curve_of_band(const Model& m, const Band& b);
Band band_of_curve(const Model& m, const ClosedCurve& c);

// Endpoint moved clockwise (pivot) or counterclockwise (unpivot) along the boundary.
Curve pivot_start(const Triangulation& t, const Curve& c);
Curve pivot_end(const Triangulation& t, const Curve& c);
Curve unpivot_start(const Triangulation& t, const Curve& c);
Curve unpivot_end(const Triangulation& t, const Curve& c);

// a followed by b; a must end where b starts.
Curve join(const Triangulation& t, const Curve& a, const Curve& b);

// Clockwise-fan order of two curves leaving the same marked point.
std::strong_ordering compare_germs(const Triangulation& t, const Curve& a, const Curve& b);

// The flip seen from the result back to `before`, with exact triangle labels.
FlipResult invert_flip(const Triangulation& before, const FlipResult& fr);
// Same curve drawn on fr.tri.
Curve transport(const Triangulation& before, const FlipResult& fr, const Curve& c);
ClosedCurve transport(const Triangulation& before, const FlipResult& fr, const ClosedCurve& c);

}  // namespace surfcat
