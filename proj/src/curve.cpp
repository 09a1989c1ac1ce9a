#include "surfcat/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfcat {

Model::Model(Triangulation t) : tri(std::move(t)), alg(tri) {
  for (const auto& [id, p] : alg.qp().placement) arrow_at[p.corner] = id;
}

ModelPtr make_model(Triangulation t) { return std::make_shared<const Model>(std::move(t)); }

Corner across(const Triangulation& t, Slot s, Corner c) {
  const Slot tw = t.twin(s);
  if (!tw.valid() || c.tri != s.tri) throw std::logic_error("across: not an internal side of the corner's triangle");
  if (c.corner == s.side) return {tw.tri, mod3(tw.side + 1)};
  if (c.corner == mod3(s.side + 1)) return {tw.tri, tw.side};
  throw std::logic_error("across: corner is not an endpoint of the side");
}

namespace {

bool touches(Corner c, Slot s) { return c.tri == s.tri && (c.corner == s.side || c.corner == mod3(s.side + 1)); }

Corner opposite(Slot s) { return {s.tri, mod3(s.side + 2)}; }

std::vector<Slot> cancel_returns(const Triangulation& t, const std::vector<Slot>& xs) {
  std::vector<Slot> out;
  for (const Slot& x : xs) {
    if (!out.empty() && t.twin(out.back()) == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

int fan_index(const Triangulation& t, Corner c) {
  const auto& fan = t.fan(t.marked_point(c));
  auto it = std::find(fan.begin(), fan.end(), c);
  if (it == fan.end()) throw std::logic_error("corner missing from its fan");
  return static_cast<int>(it - fan.begin());
}

}  // namespace

Curve reduce(const Triangulation& t, Curve c) {
  for (bool changed = true; changed;) {
    changed = false;
    auto xs = cancel_returns(t, c.crossings);
    if (xs.size() != c.crossings.size()) changed = true;
    c.crossings = std::move(xs);
    while (!c.crossings.empty() && touches(c.start, c.crossings.front())) {
      c.start = across(t, c.crossings.front(), c.start);
      c.crossings.erase(c.crossings.begin());
      changed = true;
    }
    while (!c.crossings.empty() && touches(c.end, t.twin(c.crossings.back()))) {
      c.end = across(t, t.twin(c.crossings.back()), c.end);
      c.crossings.pop_back();
      changed = true;
    }
  }
  return c;
}

ClosedCurve reduce(const Triangulation& t, ClosedCurve c) {
  auto xs = cancel_returns(t, c.crossings);
  while (xs.size() >= 2 && t.twin(xs.back()) == xs.front()) {
    xs.pop_back();
    xs.erase(xs.begin());
  }
  return {xs};
}

Curve reverse(const Triangulation& t, const Curve& c) {
  Curve r{c.end, {}, c.start};
  for (auto it = c.crossings.rbegin(); it != c.crossings.rend(); ++it) r.crossings.push_back(t.twin(*it));
  return r;
}

Curve side_curve(Slot s) { return {{s.tri, s.side}, {}, {s.tri, mod3(s.side + 1)}}; }

int start_point(const Triangulation& t, const Curve& c) { return t.marked_point(c.start); }
int end_point(const Triangulation& t, const Curve& c) { return t.marked_point(c.end); }

Slot side_of(const Curve& c) {
  if (!c.crossings.empty() || c.start.tri != c.end.tri || c.start == c.end)
    throw std::logic_error("side_of: not a side");
  if (c.end.corner == mod3(c.start.corner + 1)) return {c.start.tri, c.start.corner};
  return {c.start.tri, c.end.corner};
}

bool is_contractible(const Curve& c) { return c.crossings.empty() && c.start == c.end; }

Curve curve_of_word(const Model& m, const StringWord& w) {
  if (w.is_zero()) throw Error(ErrorCode::InvalidString, "zero string has no curve");
  const auto& t = m.tri;
  const auto verts = vertex_sequence(m.alg, w);
  Curve c;
  c.crossings.push_back(t.slots(verts[0])[start_side(m.alg, w)]);
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    c.crossings.push_back(t.slots(verts[i + 1])[m.alg.to_side(w.letters[i])]);
  c.start = opposite(c.crossings.front());
  c.end = opposite(t.slots(verts.back())[end_side(m.alg, w)]);
  return c;
}

namespace {

Letter letter_between(const Model& m, Slot exit_prev, Slot exit_next) {
  const Slot e = m.tri.twin(exit_prev);
  if (e.tri != exit_next.tri) throw std::logic_error("crossings are not consecutive");
  if (exit_next.side == mod3(e.side + 1)) return {m.arrow_at.at({e.tri, exit_next.side}), true};
  if (exit_next.side == mod3(e.side + 2)) return {m.arrow_at.at({e.tri, e.side}), false};
  throw std::logic_error("curve returns through the side it entered");
}

}  // namespace

StringWord word_of_curve(const Model& m, const Curve& c) {
  if (c.crossings.empty()) throw std::logic_error("word_of_curve: curve crosses nothing");
  if (c.crossings.size() == 1) {
    const Slot x = c.crossings.front();
    return StringWord::trivial(m.tri.arc_at(x), m.tri.slot_index(x));
  }
  std::vector<Letter> ls;
  for (std::size_t i = 0; i + 1 < c.crossings.size(); ++i)
    ls.push_back(letter_between(m, c.crossings[i], c.crossings[i + 1]));
  return StringWord::word(std::move(ls));
}

ClosedCurve curve_of_band(const Model& m, const Band& b) {
  const auto& ls = b.letters;
  const std::size_t n = ls.size();
  ClosedCurve c;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter prev = ls[(i + n - 1) % n];
    c.crossings.push_back(m.tri.slots(m.alg.from(ls[i]))[m.alg.to_side(prev)]);
  }
  return c;
}

Band band_of_curve(const Model& m, const ClosedCurve& c) {
  const std::size_t n = c.crossings.size();
  Band b;
  for (std::size_t i = 0; i < n; ++i) b.letters.push_back(letter_between(m, c.crossings[i], c.crossings[(i + 1) % n]));
  return b;
}

Curve unpivot_start(const Triangulation& t, const Curve& c) {
  const auto& fan = t.fan(start_point(t, c));
  const int p = fan_index(t, c.start);
  const int last = static_cast<int>(fan.size()) - 1;
  Curve r{{fan[last].tri, mod3(fan[last].corner + 1)}, {}, c.end};
  for (int i = last; i > p; --i) r.crossings.push_back({fan[i].tri, mod3(fan[i].corner - 1)});
  r.crossings.insert(r.crossings.end(), c.crossings.begin(), c.crossings.end());
  return reduce(t, std::move(r));
}

Curve pivot_start(const Triangulation& t, const Curve& c) {
  const auto& fan = t.fan(start_point(t, c));
  const int p = fan_index(t, c.start);
  Curve r{{fan[0].tri, mod3(fan[0].corner - 1)}, {}, c.end};
  for (int i = 0; i < p; ++i) r.crossings.push_back({fan[i].tri, fan[i].corner});
  r.crossings.insert(r.crossings.end(), c.crossings.begin(), c.crossings.end());
  return reduce(t, std::move(r));
}

Curve pivot_end(const Triangulation& t, const Curve& c) { return reverse(t, pivot_start(t, reverse(t, c))); }

Curve unpivot_end(const Triangulation& t, const Curve& c) { return reverse(t, unpivot_start(t, reverse(t, c))); }

Curve join(const Triangulation& t, const Curve& a, const Curve& b) {
  if (end_point(t, a) != start_point(t, b)) throw std::logic_error("join: endpoints differ");
  const auto& fan = t.fan(end_point(t, a));
  const int i = fan_index(t, a.end), j = fan_index(t, b.start);
  Curve r{a.start, a.crossings, b.end};
  for (int k = i; k < j; ++k) r.crossings.push_back({fan[k].tri, fan[k].corner});
  for (int k = i; k > j; --k) r.crossings.push_back({fan[k].tri, mod3(fan[k].corner - 1)});
  r.crossings.insert(r.crossings.end(), b.crossings.begin(), b.crossings.end());
  return reduce(t, std::move(r));
}

namespace {

// Twice the fan position; sides sit between corners.
int germ_position(const Triangulation& t, const Curve& c) {
  const int f = 2 * fan_index(t, c.start);
  if (!c.crossings.empty()) return f;
  return c.end.corner == mod3(c.start.corner + 1) ? f + 1 : f - 1;
}

}  // namespace

std::strong_ordering compare_germs(const Triangulation& t, const Curve& a, const Curve& b) {
  if (start_point(t, a) != start_point(t, b)) throw std::logic_error("compare_germs: different marked points");
  const int pa = germ_position(t, a), pb = germ_position(t, b);
  if (pa != pb || a.crossings.empty()) return pa <=> pb;
  // Same corner: follow the common route to the first triangle where they part.
  // Entering through side j, leaving by j+2 is earlier, stopping at corner j+2
  // is between, leaving by j+1 is later.
  const std::size_t na = a.crossings.size(), nb = b.crossings.size();
  std::size_t k = 1;
  while (k < na && k < nb && a.crossings[k] == b.crossings[k]) ++k;
  if (k == na && k == nb) return std::strong_ordering::equal;
  const int j = t.twin(a.crossings[k - 1]).side;
  auto rank = [&](const Curve& c, std::size_t n) {
    if (k == n) return 1;
    return c.crossings[k].side == mod3(j + 2) ? 0 : 2;
  };
  return rank(a, na) <=> rank(b, nb);
}

FlipResult invert_flip(const Triangulation& before, const FlipResult& fr) {
  FlipResult r{before, fr.new_arc, fr.old_arc, fr.tri_a, fr.tri_b, {}, {}};
  for (const auto& [k, v] : fr.slot_map) r.slot_map[v] = k;
  for (const auto& [k, v] : fr.corner_map) r.corner_map.emplace(v, k);
  const auto& after = fr.tri;
  for (int tri : {fr.tri_a, fr.tri_b}) {
    for (int k = 0; k < 3; ++k) {
      const Corner c{tri, k};
      if (r.corner_map.count(c)) continue;
      for (int s = 0; s < 3; ++s) {
        const Slot d{tri, s};
        if (after.arc_at(d) != fr.new_arc || !touches(c, d)) continue;
        r.corner_map[c] = r.corner_map.at(across(after, d, c));
        break;
      }
    }
  }
  return r;
}

namespace {

struct Transporter {
  const Triangulation& before;
  const FlipResult& fr;

  bool in_quad(int tri) const { return tri == fr.tri_a || tri == fr.tri_b; }
  Slot map_slot(Slot x) const { return in_quad(x.tri) ? fr.slot_map.at(x) : x; }
  Corner map_corner(Corner c) const { return in_quad(c.tri) ? fr.corner_map.at(c) : c; }
  Slot diagonal(int tri) const {
    if (!in_quad(tri)) throw std::logic_error("transport: left the flipped quadrilateral unexpectedly");
    for (int s = 0; s < 3; ++s)
      if (fr.tri.arc_at({tri, s}) == fr.new_arc) return {tri, s};
    throw std::logic_error("transport: new diagonal missing");
  }
  std::vector<Slot> gates(const std::vector<Slot>& xs) const {
    std::vector<Slot> g;
    for (const Slot& x : xs)
      if (before.arc_at(x) != fr.old_arc) g.push_back(map_slot(x));
    return g;
  }
};

}  // namespace

Curve transport(const Triangulation& before, const FlipResult& fr, const Curve& c) {
  const Transporter tr{before, fr};
  const auto& after = fr.tri;
  Curve r{tr.map_corner(c.start), {}, tr.map_corner(c.end)};
  int cur = r.start.tri;
  for (const Slot& g : tr.gates(c.crossings)) {
    if (g.tri != cur) r.crossings.push_back(tr.diagonal(cur));
    r.crossings.push_back(g);
    cur = after.twin(g).tri;
  }
  if (r.end.tri != cur) r.crossings.push_back(tr.diagonal(cur));
  return reduce(after, std::move(r));
}

ClosedCurve transport(const Triangulation& before, const FlipResult& fr, const ClosedCurve& c) {
  const Transporter tr{before, fr};
  const auto& after = fr.tri;
  const auto g = tr.gates(c.crossings);
  if (g.empty()) throw std::logic_error("transport: closed curve inside the quadrilateral");
  ClosedCurve r;
  for (std::size_t k = 0; k < g.size(); ++k) {
    r.crossings.push_back(g[k]);
    const int cur = after.twin(g[k]).tri;
    if (g[(k + 1) % g.size()].tri != cur) r.crossings.push_back(tr.diagonal(cur));
  }
  return reduce(after, std::move(r));
}

}  // namespace surfcat
