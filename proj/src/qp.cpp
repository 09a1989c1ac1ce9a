#include "surfcat/qp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace surfcat {

bool Quiver::has_arrow(int id) const {
  return std::any_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.id == id; });
}

const Arrow& Quiver::arrow(int id) const {
  for (const auto& a : arrows)
    if (a.id == id) return a;
  throw Error(ErrorCode::UnknownArrow, "unknown arrow " + std::to_string(id));
}

int Quiver::vertex_index(ArcId v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw Error(ErrorCode::UnknownArc, "unknown vertex " + std::to_string(v));
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> Quiver::count_matrix() const {
  std::vector<std::vector<int>> m(vertices.size(), std::vector<int>(vertices.size(), 0));
  for (const auto& a : arrows) ++m[vertex_index(a.source)][vertex_index(a.target)];
  return m;
}

QuiverWithPotential qp_from_triangulation(const Triangulation& t) {
  QuiverWithPotential qp;
  qp.quiver.vertices = t.internal_arcs();
  int next_id = 1;
  const auto& tris = t.triangles();
  for (int f = 0; f < static_cast<int>(tris.size()); ++f) {
    std::array<int, 3> at{0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      Slot from{f, k}, to{f, mod3(k - 1)};
      if (t.is_boundary(t.arc_at(from)) || t.is_boundary(t.arc_at(to))) continue;
      Arrow a{next_id++, t.arc_at(from), t.arc_at(to)};
      qp.quiver.arrows.push_back(a);
      qp.placement[a.id] = {Corner{f, k}, from, to};
      at[k] = a.id;
    }
    if (at[0] && at[1] && at[2]) {
      // corner 0 ends where corner 2 starts, corner 2 ends where corner 1 starts
      std::array<int, 3> cyc{at[0], at[2], at[1]};
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      qp.potential.cycles.push_back(cyc);
      for (int k = 0; k < 3; ++k) qp.relations.forbidden_pairs.insert({cyc[k], cyc[(k + 1) % 3]});
    }
  }
  return qp;
}

GentleReport check_gentle(const Quiver& q, const GentleRelations& rel) {
  GentleReport r;
  for (ArcId v : q.vertices) {
    int out = 0, in = 0;
    for (const auto& a : q.arrows) {
      out += a.source == v;
      in += a.target == v;
    }
    if (out > 2) r.violations.push_back("S1: more than two arrows start at " + std::to_string(v));
    if (in > 2) r.violations.push_back("S1: more than two arrows stop at " + std::to_string(v));
  }
  for (const auto& [x, y] : rel.forbidden_pairs) {
    if (!q.has_arrow(x) || !q.has_arrow(y) || q.arrow(x).target != q.arrow(y).source)
      r.violations.push_back("relation (" + std::to_string(x) + "," + std::to_string(y) +
                             ") is not a length-2 path");
  }
  std::map<int, std::vector<int>> follow;
  for (const auto& a : q.arrows) {
    int after = 0, before = 0;
    for (const auto& b : q.arrows) {
      if (a.target == b.source && !rel.forbids(a.id, b.id)) {
        ++after;
        follow[a.id].push_back(b.id);
      }
      if (b.target == a.source && !rel.forbids(b.id, a.id)) ++before;
    }
    if (after > 1) r.violations.push_back("S2: arrow " + std::to_string(a.id) + " has two continuations");
    if (before > 1) r.violations.push_back("S2: arrow " + std::to_string(a.id) + " has two predecessors");
  }
  // a cycle in the continuation graph is a path that never dies
  std::map<int, int> state;
  std::function<bool(int)> cyclic = [&](int a) {
    state[a] = 1;
    for (int b : follow[a]) {
      if (state[b] == 1) return true;
      if (state[b] == 0 && cyclic(b)) return true;
    }
    state[a] = 2;
    return false;
  };
  for (const auto& a : q.arrows)
    if (state[a.id] == 0 && cyclic(a.id)) {
      r.violations.push_back("infinite-dimensional: relation-free oriented cycle");
      break;
    }
  return r;
}

Quiver quiver_mutate_fz(const Quiver& q, ArcId v) {
  const int n = static_cast<int>(q.vertices.size());
  const int k = q.vertex_index(v);
  auto c = q.count_matrix();
  std::vector<std::vector<int>> b(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = c[i][j] - c[j][i];
  auto nb = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        nb[i][j] = -b[i][j];
      } else {
        nb[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    }
  Quiver out;
  out.vertices = q.vertices;
  int id = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < nb[i][j]; ++m) out.arrows.push_back({id++, q.vertices[i], q.vertices[j]});
  return out;
}

namespace {

std::multiset<std::pair<ArcId, ArcId>> arrow_set(const Quiver& q, const std::map<ArcId, ArcId>& rename) {
  auto rn = [&](ArcId x) {
    auto it = rename.find(x);
    return it == rename.end() ? x : it->second;
  };
  std::multiset<std::pair<ArcId, ArcId>> s;
  for (const auto& a : q.arrows) s.insert({rn(a.source), rn(a.target)});
  return s;
}

}  // namespace

bool same_arrows(const Quiver& a, const Quiver& b, const std::map<ArcId, ArcId>& rename) {
  std::vector<ArcId> va;
  for (ArcId x : a.vertices) {
    auto it = rename.find(x);
    va.push_back(it == rename.end() ? x : it->second);
  }
  std::vector<ArcId> vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb && arrow_set(a, rename) == arrow_set(b, {});
}

std::optional<std::map<ArcId, ArcId>> find_isomorphism(const Quiver& a, const Quiver& b) {
  const int n = static_cast<int>(a.vertices.size());
  if (n != static_cast<int>(b.vertices.size()) || a.arrows.size() != b.arrows.size()) return std::nullopt;
  auto ca = a.count_matrix(), cb = b.count_matrix();
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || ca[i][i] != cb[j][j]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p)
        ok = ca[i][p] == cb[j][img[p]] && ca[p][i] == cb[img[p]][j];
      if (!ok) continue;
      img[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    img[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::map<ArcId, ArcId> m;
  for (int i = 0; i < n; ++i) m[a.vertices[i]] = b.vertices[img[i]];
  return m;
}

bool is_acyclic(const Quiver& q) {
  std::map<ArcId, int> indeg;
  for (ArcId v : q.vertices) indeg[v] = 0;
  for (const auto& a : q.arrows) ++indeg[a.target];
  std::vector<ArcId> ready;
  for (auto& [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    ArcId v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : q.arrows)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return removed == q.vertices.size();
}

std::string to_dot(const QuiverWithPotential& qp) {
  std::ostringstream os;
  os << "// potential: ";
  for (std::size_t i = 0; i < qp.potential.cycles.size(); ++i) {
    const auto& c = qp.potential.cycles[i];
    os << (i ? ";" : "") << "(" << c[0] << "," << c[1] << "," << c[2] << ")";
  }
  os << "\ndigraph Q {\n";
  for (ArcId v : qp.quiver.vertices) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : qp.quiver.arrows)
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.id << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace surfcat
