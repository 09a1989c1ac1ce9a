#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfcat/error.hpp"

namespace surfcat {

using ArcId = int;

struct Arc {
  ArcId id = 0;
  bool is_boundary = false;
};

// One side of a triangle. reversed = true when walking the triangle in side
// order runs against the arc's own direction.
struct Side {
  ArcId arc = 0;
  bool reversed = false;
};

struct Triangle {
  std::array<Side, 3> sides;
};

// Side k of triangle tri.
struct Slot {
  int tri = -1;
  int side = -1;
  auto operator<=>(const Slot&) const = default;
  bool valid() const { return tri >= 0; }
};

// Corner k of a triangle is the vertex where side k starts (and side k-1 ends).
struct Corner {
  int tri = -1;
  int corner = -1;
  auto operator<=>(const Corner&) const = default;
};

inline int mod3(int k) { return ((k % 3) + 3) % 3; }

struct SurfaceInvariants {
  int genus = 0;
  int boundary_components = 0;
  std::vector<int> marked_counts;
  int marked_points = 0;
  int internal_arcs = 0;
  auto operator<=>(const SurfaceInvariants&) const = default;
};

class Triangulation {
 public:
  static Triangulation build(std::vector<Arc> arcs, std::vector<Triangle> triangles);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool has_arc(ArcId id) const { return index_.count(id) > 0; }
  const Arc& arc(ArcId id) const;
  bool is_boundary(ArcId id) const { return arc(id).is_boundary; }
  // Sorted ids of internal arcs.
  const std::vector<ArcId>& internal_arcs() const { return internal_; }
  int internal_arc_count() const { return static_cast<int>(internal_.size()); }
  ArcId max_arc_id() const;

  const Side& side(Slot s) const { return triangles_[s.tri].sides[s.side]; }
  ArcId arc_at(Slot s) const { return side(s).arc; }
  // slots(a)[0] is the slot with reversed = false (or the only slot of a boundary arc).
  const std::array<Slot, 2>& slots(ArcId id) const;
  // The other slot of the same internal arc; invalid Slot for boundary arcs.
  Slot twin(Slot s) const;
  // Which of slots(arc_at(s)) equals s.
  int slot_index(Slot s) const;

  int marked_point(Corner c) const { return corner_mp_[c.tri * 3 + c.corner]; }
  int marked_point_count() const { return static_cast<int>(fans_.size()); }
  // Corners around a marked point, from the one after the incoming boundary
  // side to the one before the outgoing boundary side; consecutive corners
  // share the outgoing side of the earlier one.
  const std::vector<Corner>& fan(int mp) const { return fans_[mp]; }
  Slot boundary_out(int mp) const { return out_[mp]; }
  Slot boundary_in(int mp) const { return in_[mp]; }
  int clockwise_next(int mp) const;
  int counterclockwise_next(int mp) const;
  int boundary_component_of(int mp) const { return mp_component_[mp]; }
  // Each component as the cyclic list of marked points in clockwise_next order.
  const std::vector<std::vector<int>>& boundary_components() const { return components_; }

  SurfaceInvariants invariants() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<Triangle> triangles_;
  std::map<ArcId, int> index_;
  std::vector<ArcId> internal_;
  std::vector<std::array<Slot, 2>> slots_;
  std::vector<int> corner_mp_;
  std::vector<std::vector<Corner>> fans_;
  std::vector<Slot> out_;
  std::vector<Slot> in_;
  std::vector<int> mp_component_;
  std::vector<std::vector<int>> components_;
};

Triangulation canonical_polygon(int c);
Triangulation canonical_annulus(int t1, int t2);

struct FlipResult {
  Triangulation tri;
  ArcId old_arc = 0;
  ArcId new_arc = 0;
  int tri_a = -1;
  int tri_b = -1;
  // Quadrilateral sides and corners of the old triangles, mapped to the new ones.
  std::map<Slot, Slot> slot_map;
  std::map<Corner, Corner> corner_map;
};

// new_id <= 0 allocates max id + 1.
FlipResult flip(const Triangulation& t, ArcId a, ArcId new_id = 0);

std::string to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);
Triangulation load_triangulation(const std::string& path);

}  // namespace surfcat
