#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfcat/hom.hpp"

namespace surfcat {

// Word of the same curve after the flip. Zero when the curve becomes an arc
// of the new triangulation.
StringWord transport_word(const ModelPtr& before, const FlipResult& fr, const ModelPtr& after, const StringWord& w);

// Summands are drawn on `model`.
struct ClusterTilting {
  ModelPtr model;
  std::vector<ObjectC> summands;
};

ClusterTilting cluster_of(const ModelPtr& m);

struct ExchangeTriangles {
  ObjectC replacement;
  std::vector<ObjectC> middle_left;   // summands with an arrow into summand i
  std::vector<ObjectC> middle_right;  // summands with an arrow out of summand i
  int ext = 0;                        // ext1_c_dim(summand i, replacement)
};

ExchangeTriangles exchange_triangles(const ClusterTilting& T, std::size_t i);
ClusterTilting mutate_ct(const ClusterTilting& T, std::size_t i);

struct CTCheck {
  bool ok = false;
  std::string reason;
  std::optional<Triangulation> triangulation;
  std::vector<ArcId> arc_ids;  // arc of the extracted triangulation for each object
};

// Arcs of `m` keep their ids in the extracted triangulation, other objects
// get fresh ids above max_arc_id.
CTCheck cluster_tilting_check(const ModelPtr& m, const std::vector<ObjectC>& objs);

// Same string for triangulations that agree after renaming internal arcs,
// boundary arcs kept.
std::string triangulation_key(const Triangulation& t);

// One representative per key, breadth first from t.
std::vector<Triangulation> flip_graph(const Triangulation& t, std::size_t cap = 100000);

// Shortest list of arcs to flip (each flip reuses the flipped arc's id) taking
// t1 to a triangulation with the key of t2.
std::vector<ArcId> flip_path(const Triangulation& t1, const Triangulation& t2, std::size_t cap = 100000);

}  // namespace surfcat
