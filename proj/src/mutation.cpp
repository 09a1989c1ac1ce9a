#include "surfcat/mutation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace surfcat {

StringWord transport_word(const ModelPtr& before, const FlipResult& fr, const ModelPtr& after, const StringWord& w) {
  const ObjectC y = transport_object(after, before->tri, fr, string_object(before, w));
  return y.kind == ObjectC::Kind::String ? y.word() : StringWord::zero();
}

ClusterTilting cluster_of(const ModelPtr& m) {
  ClusterTilting T{m, {}};
  for (ArcId a : m->tri.internal_arcs()) T.summands.push_back(arc_object(m, a));
  return T;
}

namespace {

struct Germ {
  int curve = 0;
  bool forward = true;
  auto operator<=>(const Germ&) const = default;
};

// Triangles spanned by a family of curves (the summands, then the boundary
// segments), read off from the order of their germs around each marked point.
// The corner between consecutive germs a, b continues at the far end of b.
struct Reconstruction {
  std::vector<Curve> curves;
  std::vector<std::vector<Germ>> order;  // per marked point, in fan order
  std::map<Germ, std::pair<int, int>> position;
  std::vector<std::array<Germ, 3>> triangles;
  std::string failure;

  Curve germ_curve(const Triangulation& t, Germ g) const { return g.forward ? curves[g.curve] : reverse(t, curves[g.curve]); }
  Germ neighbour(Germ g, int step) const {
    const auto [p, i] = position.at(g);
    const int j = i + step;
    if (j < 0 || j >= static_cast<int>(order[p].size())) return {-1, true};
    return order[p][j];
  }
};

Reconstruction reconstruct(const Triangulation& t, const std::vector<Curve>& summands) {
  Reconstruction r;
  r.curves = summands;
  for (const Arc& a : t.arcs())
    if (a.is_boundary) r.curves.push_back(side_curve(t.slots(a.id)[0]));
  r.order.resize(t.marked_point_count());
  for (int c = 0; c < static_cast<int>(r.curves.size()); ++c)
    for (bool fwd : {true, false}) {
      const Germ g{c, fwd};
      r.order[start_point(t, r.germ_curve(t, g))].push_back(g);
    }
  for (int p = 0; p < t.marked_point_count(); ++p) {
    auto& o = r.order[p];
    std::sort(o.begin(), o.end(), [&](Germ a, Germ b) {
      return compare_germs(t, r.germ_curve(t, a), r.germ_curve(t, b)) < 0;
    });
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i > 0 && compare_germs(t, r.germ_curve(t, o[i - 1]), r.germ_curve(t, o[i])) == 0) {
        r.failure = "two curves leave a marked point along the same route";
        return r;
      }
      r.position[o[i]] = {p, static_cast<int>(i)};
    }
  }
  std::set<Germ> used;
  for (int p = 0; p < t.marked_point_count(); ++p)
    for (std::size_t i = 0; i + 1 < r.order[p].size(); ++i) {
      const Germ first = r.order[p][i + 1];
      if (used.count(first)) continue;
      std::array<Germ, 3> tri;
      Germ side = first;
      for (int k = 0; k < 3; ++k) {
        tri[k] = side;
        used.insert(side);
        side = r.neighbour({side.curve, !side.forward}, 1);
        if (side.curve < 0) {
          r.failure = "a corner does not close up";
          return r;
        }
      }
      if (side != first) {
        r.failure = "corners do not form triangles";
        return r;
      }
      r.triangles.push_back(tri);
    }
  return r;
}

std::vector<Curve> curves_of(const std::vector<ObjectC>& objs) {
  std::vector<Curve> out;
  for (const auto& x : objs) out.push_back(x.curve);
  return out;
}

void require_string_or_arc(const ObjectC& x) {
  if (x.kind == ObjectC::Kind::Band) throw Error(ErrorCode::BandArgument, "bands are not cluster-tilting summands");
}

}  // namespace

ExchangeTriangles exchange_triangles(const ClusterTilting& T, std::size_t i) {
  if (i >= T.summands.size()) throw Error(ErrorCode::UnknownArc, "no summand " + std::to_string(i));
  const Triangulation& t = T.model->tri;
  const Reconstruction r = reconstruct(t, curves_of(T.summands));
  if (!r.failure.empty() || r.triangles.size() != t.triangles().size())
    throw Error(ErrorCode::MalformedSpec, "summands do not form a triangulation: " + r.failure);
  const int c = static_cast<int>(i);
  const Germ at_p{c, true}, at_q{c, false};
  ExchangeTriangles ex;
  ex.replacement =
      object_of_curve(T.model, join(t, reverse(t, r.germ_curve(t, r.neighbour(at_p, -1))), r.germ_curve(t, r.neighbour(at_p, 1))));
  const int n = static_cast<int>(T.summands.size());
  for (Germ g : {r.neighbour(at_p, 1), r.neighbour(at_q, 1)})
    if (g.curve < n) ex.middle_left.push_back(T.summands[g.curve]);
  for (Germ g : {r.neighbour(at_p, -1), r.neighbour(at_q, -1)})
    if (g.curve < n) ex.middle_right.push_back(T.summands[g.curve]);
  ex.ext = ext1_c_dim(T.summands[i], ex.replacement);
  return ex;
}

ClusterTilting mutate_ct(const ClusterTilting& T, std::size_t i) {
  ClusterTilting out = T;
  out.summands[i] = exchange_triangles(T, i).replacement;
  return out;
}

CTCheck cluster_tilting_check(const ModelPtr& m, const std::vector<ObjectC>& objs) {
  for (const auto& x : objs) require_string_or_arc(x);
  CTCheck res;
  const Triangulation& t = m->tri;
  if (static_cast<int>(objs.size()) != t.internal_arc_count()) {
    res.reason = "expected " + std::to_string(t.internal_arc_count()) + " summands";
    return res;
  }
  for (std::size_t a = 0; a < objs.size(); ++a) {
    if (objs[a].is_zero()) {
      res.reason = "zero summand";
      return res;
    }
    for (std::size_t b = a; b < objs.size(); ++b) {
      if (b != a && object_equal(objs[a], objs[b])) {
        res.reason = "repeated summand";
        return res;
      }
      if (ext1_c_dim(objs[a], objs[b]) != 0) {
        res.reason = "extension between " + format(objs[a]) + " and " + format(objs[b]);
        return res;
      }
    }
  }
  const Reconstruction r = reconstruct(t, curves_of(objs));
  if (!r.failure.empty()) {
    res.reason = r.failure;
    return res;
  }
  std::set<ArcId> taken;
  for (const auto& x : objs)
    if (x.kind == ObjectC::Kind::Arc) taken.insert(x.arc());
  ArcId next = t.max_arc_id();
  for (const auto& x : objs) {
    if (x.kind == ObjectC::Kind::Arc) {
      res.arc_ids.push_back(x.arc());
      continue;
    }
    while (taken.count(++next)) {
    }
    res.arc_ids.push_back(next);
  }
  std::vector<Arc> arcs;
  for (ArcId id : res.arc_ids) arcs.push_back({id, false});
  std::vector<ArcId> boundary;
  for (const Arc& a : t.arcs())
    if (a.is_boundary) {
      arcs.push_back(a);
      boundary.push_back(a.id);
    }
  std::vector<Triangle> tris;
  for (const auto& g : r.triangles) {
    Triangle f;
    for (int k = 0; k < 3; ++k) {
      const int c = g[k].curve;
      if (c < static_cast<int>(objs.size())) {
        f.sides[k] = {res.arc_ids[c], !g[k].forward};
      } else {
        const ArcId b = boundary[c - objs.size()];
        const bool own = t.side(t.slots(b)[0]).reversed;
        f.sides[k] = {b, g[k].forward ? own : !own};
      }
    }
    tris.push_back(f);
  }
  try {
    res.triangulation = Triangulation::build(std::move(arcs), std::move(tris));
  } catch (const Error& e) {
    res.reason = e.what();
    res.arc_ids.clear();
    return res;
  }
  res.ok = true;
  return res;
}

namespace {

struct Canonical {
  std::string key;
  std::map<ArcId, int> label;  // internal arc -> position of first visit
};

// Triangles visited breadth first from the smallest boundary arc, each turned
// so that the side it was entered through comes first.
Canonical canonical(const Triangulation& t) {
  Canonical c;
  ArcId anchor = -1;
  for (const Arc& a : t.arcs())
    if (a.is_boundary && (anchor < 0 || a.id < anchor)) anchor = a.id;
  std::vector<int> rot(t.triangles().size(), -1);
  std::map<ArcId, bool> first_dir;
  std::deque<int> queue;
  const Slot s0 = t.slots(anchor)[0];
  rot[s0.tri] = s0.side;
  queue.push_back(s0.tri);
  std::ostringstream out;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    out << '(';
    for (int k = 0; k < 3; ++k) {
      const Slot s{f, mod3(rot[f] + k)};
      const Side& sd = t.side(s);
      if (k) out << ',';
      if (t.is_boundary(sd.arc)) {
        out << 'b' << sd.arc << (sd.reversed ? "r" : "");
        continue;
      }
      if (!c.label.count(sd.arc)) {
        const int next = static_cast<int>(c.label.size());
        c.label[sd.arc] = next;
        first_dir[sd.arc] = sd.reversed;
      }
      out << c.label[sd.arc] << (sd.reversed != first_dir[sd.arc] ? "r" : "");
      const Slot tw = t.twin(s);
      if (rot[tw.tri] < 0) {
        rot[tw.tri] = tw.side;
        queue.push_back(tw.tri);
      }
    }
    out << ')';
  }
  c.key = out.str();
  return c;
}

std::vector<ArcId> boundary_ids(const Triangulation& t) {
  std::vector<ArcId> out;
  for (const Arc& a : t.arcs())
    if (a.is_boundary) out.push_back(a.id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string triangulation_key(const Triangulation& t) { return canonical(t).key; }

std::vector<Triangulation> flip_graph(const Triangulation& t, std::size_t cap) {
  std::vector<Triangulation> nodes{t};
  std::set<std::string> seen{triangulation_key(t)};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (ArcId a : nodes[i].internal_arcs()) {
      Triangulation next = flip(nodes[i], a, a).tri;
      if (!seen.insert(triangulation_key(next)).second) continue;
      if (nodes.size() >= cap) throw Error(ErrorCode::FrontierExceeded, "flip graph larger than " + std::to_string(cap));
      nodes.push_back(std::move(next));
    }
  }
  return nodes;
}

std::vector<ArcId> flip_path(const Triangulation& t1, const Triangulation& t2, std::size_t cap) {
  if (t1.invariants() != t2.invariants() || boundary_ids(t1) != boundary_ids(t2))
    throw Error(ErrorCode::MalformedInput, "triangulations of different surfaces");
  struct Search {
    std::map<std::string, std::pair<std::string, ArcId>> parent;
    std::map<std::string, Triangulation> node;
    std::vector<std::string> frontier;
  };
  Search fwd, bwd;
  const std::string k1 = triangulation_key(t1), k2 = triangulation_key(t2);
  if (k1 == k2) return {};
  fwd.node.emplace(k1, t1);
  fwd.frontier = {k1};
  bwd.node.emplace(k2, t2);
  bwd.frontier = {k2};

  auto path_to = [](const Search& s, std::string k) {
    std::vector<ArcId> arcs;  // flips leading from the root to k, last first
    while (s.parent.count(k)) {
      arcs.push_back(s.parent.at(k).second);
      k = s.parent.at(k).first;
    }
    return arcs;
  };
  auto finish = [&](const std::string& meet) {
    std::vector<ArcId> path = path_to(fwd, meet);
    std::reverse(path.begin(), path.end());
    // the backward half is written in t2's labels; rename through the common key
    const Canonical cf = canonical(fwd.node.at(meet)), cb = canonical(bwd.node.at(meet));
    std::map<int, ArcId> by_label;
    for (const auto& [arc, l] : cf.label) by_label[l] = arc;
    for (ArcId a : path_to(bwd, meet)) path.push_back(by_label.at(cb.label.at(a)));
    return path;
  };

  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    const bool forward = fwd.frontier.size() <= bwd.frontier.size();
    Search& s = forward ? fwd : bwd;
    const Search& other = forward ? bwd : fwd;
    std::vector<std::string> next_frontier;
    for (const std::string& k : s.frontier) {
      const Triangulation cur = s.node.at(k);
      for (ArcId a : cur.internal_arcs()) {
        Triangulation nt = flip(cur, a, a).tri;
        const std::string nk = triangulation_key(nt);
        if (s.node.count(nk)) continue;
        s.node.emplace(nk, std::move(nt));
        s.parent[nk] = {k, a};
        if (other.node.count(nk)) return finish(nk);
        next_frontier.push_back(nk);
        if (fwd.node.size() + bwd.node.size() > cap)
          throw Error(ErrorCode::FrontierExceeded, "search frontier exceeded " + std::to_string(cap));
      }
    }
    s.frontier = std::move(next_frontier);
  }
  throw Error(ErrorCode::MalformedInput, "no flip sequence found");
}

}  // namespace surfcat
