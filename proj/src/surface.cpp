#include "surfcat/surface.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace surfcat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonManifoldGluing: return "NonManifoldGluing";
    case ErrorCode::SelfFoldedTriangle: return "SelfFoldedTriangle";
    case ErrorCode::NoMarkedPointOnBoundary: return "NoMarkedPointOnBoundary";
    case ErrorCode::TooSmallSurface: return "TooSmallSurface";
    case ErrorCode::BoundaryArcFlip: return "BoundaryArcFlip";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::InvalidString: return "InvalidString";
    case ErrorCode::ZeroStringStatus: return "ZeroStringStatus";
    case ErrorCode::OnPeak: return "OnPeak";
    case ErrorCode::NotOnPeak: return "NotOnPeak";
    case ErrorCode::InjectiveModule: return "InjectiveModule";
    case ErrorCode::ProjectiveModule: return "ProjectiveModule";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NoExactStructureFound: return "NoExactStructureFound";
    case ErrorCode::ZeroObject: return "ZeroObject";
    case ErrorCode::MixedTriangulations: return "MixedTriangulations";
    case ErrorCode::BandArgument: return "BandArgument";
    case ErrorCode::NoCrossingPatternFound: return "NoCrossingPatternFound";
    case ErrorCode::NoSelfCrossingPatternFound: return "NoSelfCrossingPatternFound";
    case ErrorCode::FrontierExceeded: return "FrontierExceeded";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace

Triangulation Triangulation::build(std::vector<Arc> arcs, std::vector<Triangle> triangles) {
  Triangulation t;
  t.arcs_ = std::move(arcs);
  t.triangles_ = std::move(triangles);
  for (int i = 0; i < static_cast<int>(t.arcs_.size()); ++i) {
    if (!t.index_.emplace(t.arcs_[i].id, i).second)
      fail(ErrorCode::MalformedInput, "duplicate arc id " + std::to_string(t.arcs_[i].id));
  }
  const int ntri = static_cast<int>(t.triangles_.size());
  std::vector<std::vector<Slot>> uses(t.arcs_.size());
  for (int f = 0; f < ntri; ++f) {
    const auto& sd = t.triangles_[f].sides;
    for (int k = 0; k < 3; ++k) {
      auto it = t.index_.find(sd[k].arc);
      if (it == t.index_.end())
        fail(ErrorCode::UnknownArc, "triangle " + std::to_string(f) + " uses undeclared arc " +
                                        std::to_string(sd[k].arc));
      uses[it->second].push_back({f, k});
    }
    if (sd[0].arc == sd[1].arc || sd[1].arc == sd[2].arc || sd[0].arc == sd[2].arc)
      fail(ErrorCode::SelfFoldedTriangle, "triangle " + std::to_string(f) + " repeats an arc");
  }
  t.slots_.resize(t.arcs_.size());
  for (std::size_t i = 0; i < t.arcs_.size(); ++i) {
    const Arc& a = t.arcs_[i];
    const auto& u = uses[i];
    const std::size_t want = a.is_boundary ? 1 : 2;
    if (u.size() != want)
      fail(ErrorCode::NonManifoldGluing, "arc " + std::to_string(a.id) + " occupies " +
                                             std::to_string(u.size()) + " slots, expected " +
                                             std::to_string(want));
    if (a.is_boundary) {
      t.slots_[i] = {u[0], Slot{}};
      continue;
    }
    bool r0 = t.side(u[0]).reversed, r1 = t.side(u[1]).reversed;
    if (r0 == r1)
      fail(ErrorCode::NonManifoldGluing,
           "arc " + std::to_string(a.id) + " glued without matching orientation");
    t.slots_[i] = r0 ? std::array<Slot, 2>{u[1], u[0]} : std::array<Slot, 2>{u[0], u[1]};
    t.internal_.push_back(a.id);
  }
  std::sort(t.internal_.begin(), t.internal_.end());

  // Fans: walk each boundary vertex from its incoming boundary side.
  std::vector<int> seen(3 * ntri, -1);
  struct Pending {
    std::vector<Corner> corners;
    Slot in, out;
  };
  std::vector<Pending> fans;
  for (std::size_t i = 0; i < t.arcs_.size(); ++i) {
    if (!t.arcs_[i].is_boundary) continue;
    Slot in = t.slots_[i][0];
    Pending p;
    p.in = in;
    Corner c{in.tri, mod3(in.side + 1)};
    while (true) {
      if (seen[c.tri * 3 + c.corner] >= 0)
        fail(ErrorCode::NonManifoldGluing, "corner cycle does not close at a boundary");
      seen[c.tri * 3 + c.corner] = static_cast<int>(fans.size());
      p.corners.push_back(c);
      Slot outgoing{c.tri, c.corner};
      if (t.is_boundary(t.arc_at(outgoing))) {
        p.out = outgoing;
        break;
      }
      Slot tw = t.twin(outgoing);
      c = {tw.tri, mod3(tw.side + 1)};
    }
    fans.push_back(std::move(p));
  }
  if (std::any_of(seen.begin(), seen.end(), [](int v) { return v < 0; }))
    fail(ErrorCode::NoMarkedPointOnBoundary, "a vertex is not on the boundary (puncture)");

  // Connectedness through internal arcs.
  if (ntri > 0) {
    std::vector<char> reach(ntri, 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        Slot tw = t.twin({f, k});
        if (tw.valid() && !reach[tw.tri]) {
          reach[tw.tri] = 1;
          stack.push_back(tw.tri);
        }
      }
    }
    if (std::find(reach.begin(), reach.end(), 0) != reach.end())
      fail(ErrorCode::NonManifoldGluing, "gluing is disconnected");
  }

  std::vector<int> order(fans.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return t.arc_at(fans[x].in) < t.arc_at(fans[y].in);
  });
  std::vector<int> rank(fans.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
  t.corner_mp_.resize(3 * ntri);
  for (int i = 0; i < 3 * ntri; ++i) t.corner_mp_[i] = rank[seen[i]];
  t.fans_.resize(fans.size());
  t.out_.resize(fans.size());
  t.in_.resize(fans.size());
  for (std::size_t f = 0; f < fans.size(); ++f) {
    int r = rank[f];
    t.fans_[r] = fans[f].corners;
    t.out_[r] = fans[f].out;
    t.in_[r] = fans[f].in;
  }

  t.mp_component_.assign(fans.size(), -1);
  for (int m = 0; m < t.marked_point_count(); ++m) {
    if (t.mp_component_[m] >= 0) continue;
    std::vector<int> cyc;
    int x = m;
    do {
      t.mp_component_[x] = static_cast<int>(t.components_.size());
      cyc.push_back(x);
      x = t.clockwise_next(x);
    } while (x != m);
    t.components_.push_back(std::move(cyc));
  }

  if (t.internal_arc_count() < 1)
    fail(ErrorCode::TooSmallSurface, "surface has no internal arcs");
  return t;
}

const Arc& Triangulation::arc(ArcId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorCode::UnknownArc, "unknown arc " + std::to_string(id));
  return arcs_[it->second];
}

const std::array<Slot, 2>& Triangulation::slots(ArcId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorCode::UnknownArc, "unknown arc " + std::to_string(id));
  return slots_[it->second];
}

ArcId Triangulation::max_arc_id() const {
  ArcId m = 0;
  for (const auto& a : arcs_) m = std::max(m, a.id);
  return m;
}

Slot Triangulation::twin(Slot s) const {
  const auto& sl = slots(arc_at(s));
  if (!sl[1].valid()) return {};
  return sl[0] == s ? sl[1] : sl[0];
}

int Triangulation::slot_index(Slot s) const {
  return slots(arc_at(s))[0] == s ? 0 : 1;
}

int Triangulation::clockwise_next(int mp) const {
  Slot s = in_[mp];
  return marked_point({s.tri, s.side});
}

int Triangulation::counterclockwise_next(int mp) const {
  Slot s = out_[mp];
  return marked_point({s.tri, mod3(s.side + 1)});
}

SurfaceInvariants Triangulation::invariants() const {
  SurfaceInvariants inv;
  inv.boundary_components = static_cast<int>(components_.size());
  for (const auto& c : components_) inv.marked_counts.push_back(static_cast<int>(c.size()));
  inv.marked_points = marked_point_count();
  inv.internal_arcs = internal_arc_count();
  int chi = marked_point_count() - static_cast<int>(arcs_.size()) +
            static_cast<int>(triangles_.size());
  inv.genus = (2 - inv.boundary_components - chi) / 2;
  return inv;
}

namespace {

// Same triangle read in the opposite rotational sense.
Triangle mirrored(const Triangle& t) {
  Triangle m;
  for (int k = 0; k < 3; ++k) m.sides[k] = {t.sides[2 - k].arc, !t.sides[2 - k].reversed};
  return m;
}

}  // namespace

Triangulation canonical_polygon(int c) {
  if (c < 4) fail(ErrorCode::TooSmallSurface, "polygon needs at least 4 marked points");
  const int n = c - 3;
  std::vector<Arc> arcs;
  for (int k = 1; k <= n; ++k) arcs.push_back({k, false});
  for (int k = 0; k < c; ++k) arcs.push_back({n + 1 + k, true});
  std::vector<Triangle> tris;
  for (int f = 0; f < c - 2; ++f) {
    Triangle t;
    t.sides[0] = f == 0 ? Side{n + 1, false} : Side{f, false};
    t.sides[1] = Side{n + 2 + f, false};
    t.sides[2] = f == c - 3 ? Side{n + c, false} : Side{f + 1, true};
    tris.push_back(mirrored(t));
  }
  return Triangulation::build(std::move(arcs), std::move(tris));
}

Triangulation canonical_annulus(int t1, int t2) {
  if (t1 < 1 || t2 < 1) fail(ErrorCode::TooSmallSurface, "annulus needs a marked point on each boundary");
  const int n = t1 + t2;
  std::vector<Arc> arcs;
  for (int k = 1; k <= n; ++k) arcs.push_back({k, false});
  for (int k = 0; k < n; ++k) arcs.push_back({n + 1 + k, true});
  std::vector<Triangle> tris;
  int a = 0, b = 0;
  for (int k = 0; k < n; ++k) {
    ArcId cur = k + 1, next = (k + 1) % n + 1;
    bool outer = (k + 1) * t1 / n > k * t1 / n;
    Triangle t;
    if (outer) {
      t.sides = {Side{cur, false}, Side{next, true}, Side{n + 1 + a, false}};
      ++a;
    } else {
      t.sides = {Side{cur, false}, Side{n + 1 + t1 + b, false}, Side{next, true}};
      ++b;
    }
    tris.push_back(mirrored(t));
  }
  return Triangulation::build(std::move(arcs), std::move(tris));
}

FlipResult flip(const Triangulation& t, ArcId a, ArcId new_id) {
  if (t.is_boundary(a)) fail(ErrorCode::BoundaryArcFlip, "arc " + std::to_string(a) + " is a boundary arc");
  if (new_id <= 0) new_id = t.max_arc_id() + 1;
  const auto sl = t.slots(a);
  const Slot sa = sl[0], sb = sl[1];
  const int A = sa.tri, B = sb.tri, i = sa.side, j = sb.side;
  const auto& ta = t.triangles()[A].sides;
  const auto& tb = t.triangles()[B].sides;
  Side x = ta[mod3(i + 1)], y = ta[mod3(i + 2)];
  Side z = tb[mod3(j + 1)], w = tb[mod3(j + 2)];

  std::vector<Arc> arcs = t.arcs();
  for (auto& arc : arcs)
    if (arc.id == a) arc.id = new_id;
  std::vector<Triangle> tris = t.triangles();
  tris[A].sides = {y, z, Side{new_id, true}};
  tris[B].sides = {w, x, Side{new_id, false}};

  FlipResult r{Triangulation::build(std::move(arcs), std::move(tris)), a, new_id, A, B, {}, {}};
  r.slot_map[{A, mod3(i + 1)}] = {B, 1};
  r.slot_map[{A, mod3(i + 2)}] = {A, 0};
  r.slot_map[{B, mod3(j + 1)}] = {A, 1};
  r.slot_map[{B, mod3(j + 2)}] = {B, 0};
  r.corner_map[{A, i}] = {A, 1};
  r.corner_map[{A, mod3(i + 1)}] = {B, 1};
  r.corner_map[{A, mod3(i + 2)}] = {A, 0};
  r.corner_map[{B, j}] = {B, 1};
  r.corner_map[{B, mod3(j + 1)}] = {A, 1};
  r.corner_map[{B, mod3(j + 2)}] = {B, 0};
  return r;
}

std::string to_json(const Triangulation& t) {
  nlohmann::ordered_json j;
  j["arcs"] = nlohmann::ordered_json::array();
  for (const auto& a : t.arcs()) {
    nlohmann::ordered_json e;
    e["id"] = a.id;
    e["boundary"] = a.is_boundary;
    j["arcs"].push_back(e);
  }
  j["triangles"] = nlohmann::ordered_json::array();
  for (const auto& f : t.triangles()) {
    nlohmann::ordered_json sides = nlohmann::ordered_json::array();
    for (const auto& s : f.sides) {
      nlohmann::ordered_json e;
      e["arc"] = s.arc;
      e["reversed"] = s.reversed;
      sides.push_back(e);
    }
    nlohmann::ordered_json e;
    e["sides"] = sides;
    j["triangles"].push_back(e);
  }
  return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
  std::vector<Arc> arcs;
  std::vector<Triangle> tris;
  try {
    auto j = nlohmann::json::parse(text);
    for (const auto& e : j.at("arcs")) arcs.push_back({e.at("id").get<int>(), e.at("boundary").get<bool>()});
    for (const auto& e : j.at("triangles")) {
      const auto& sides = e.at("sides");
      if (sides.size() != 3) fail(ErrorCode::MalformedInput, "triangle without three sides");
      Triangle f;
      for (int k = 0; k < 3; ++k)
        f.sides[k] = {sides[k].at("arc").get<int>(), sides[k].at("reversed").get<bool>()};
      tris.push_back(f);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
  return Triangulation::build(std::move(arcs), std::move(tris));
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return triangulation_from_json(ss.str());
}

}  // namespace surfcat
