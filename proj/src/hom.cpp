#include "surfcat/hom.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace surfcat {

namespace {

int letter_count(const StringWord& w) { return w.kind == StringWord::Kind::Word ? w.length() : 0; }

std::vector<Letter> segment(const StringWord& w, Interval I) {
  return {w.letters.begin() + I.begin, w.letters.begin() + I.end};
}

std::vector<Letter> inverted(const std::vector<Letter>& ls) {
  std::vector<Letter> out;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back({it->arrow, !it->inverse});
  return out;
}

template <typename Keep>
std::vector<Interval> intervals(const StringWord& w, Keep keep) {
  std::vector<Interval> out;
  if (w.is_zero()) return out;
  const int L = letter_count(w);
  for (int a = 0; a <= L; ++a)
    for (int b = a; b <= L; ++b)
      if (keep(a, b, L)) out.push_back({a, b});
  return out;
}

}  // namespace

std::vector<Interval> factor_intervals(const StringWord& w) {
  return intervals(w, [&](int a, int b, int L) {
    return (a == 0 || w.letters[a - 1].inverse) && (b == L || !w.letters[b].inverse);
  });
}

std::vector<Interval> sub_intervals(const StringWord& w) {
  return intervals(w, [&](int a, int b, int L) {
    return (a == 0 || !w.letters[a - 1].inverse) && (b == L || w.letters[b].inverse);
  });
}

HomJ hom_j(const GentleAlgebra& A, const StringWord& w, const StringWord& v) {
  HomJ h;
  if (w.is_zero() || v.is_zero()) return h;
  const auto vw = vertex_sequence(A, w), vv = vertex_sequence(A, v);
  const auto subs = sub_intervals(v);
  for (const Interval& f : factor_intervals(w))
    for (const Interval& s : subs) {
      if (f.length() != s.length()) continue;
      if (f.length() == 0) {
        if (vw[f.begin] == vv[s.begin]) h.basis.maps.push_back({f, s, false});
        continue;
      }
      const auto cf = segment(w, f), cs = segment(v, s);
      if (cf == cs)
        h.basis.maps.push_back({f, s, false});
      else if (cf == inverted(cs))
        h.basis.maps.push_back({f, s, true});
    }
  h.dim = static_cast<int>(h.basis.maps.size());
  return h;
}

StringWord tau_j(const ModelPtr& m, const StringWord& w, int direction) {
  const ObjectC y = shift(string_object(m, w), direction < 0 ? -1 : 1);
  if (y.kind != ObjectC::Kind::String) {
    if (direction < 0) throw Error(ErrorCode::InjectiveModule, format(w) + " has an injective module");
    throw Error(ErrorCode::ProjectiveModule, format(w) + " has a projective module");
  }
  return y.word();
}

namespace {

void reject_bands(const ObjectC& x) {
  if (x.kind == ObjectC::Kind::Band) throw Error(ErrorCode::BandArgument, "bands are not supported here");
}

StringWord word_or_zero(const ObjectC& x) { return x.kind == ObjectC::Kind::String ? x.word() : StringWord::zero(); }

}  // namespace

int hom_c_dim(const ObjectC& x, const ObjectC& y) {
  reject_bands(x);
  reject_bands(y);
  if (x.is_zero() || y.is_zero()) return 0;
  if (x.model != y.model && to_json(x.model->tri) != to_json(y.model->tri))
    throw Error(ErrorCode::MixedTriangulations, "objects live on different triangulations");
  const GentleAlgebra& A = x.model->alg;
  // tau inverse of y and tau of x; arcs of T have zero modules
  const StringWord ty = word_or_zero(shift(y, -1)), tx = word_or_zero(shift(x, 1));
  return hom_j_dim(A, word_or_zero(x), word_or_zero(y)) + hom_j_dim(A, ty, tx);
}

int ext1_c_dim(const ObjectC& x, const ObjectC& y) {
  reject_bands(x);
  reject_bands(y);
  return hom_c_dim(x, shift(y, 1));
}

bool is_rigid(const ObjectC& x) { return ext1_c_dim(x, x) == 0; }

namespace {

std::optional<StringWord> make_string(const GentleAlgebra& A, std::vector<Letter> ls, ArcId vertex) {
  StringWord w = ls.empty() ? StringWord::trivial(vertex) : StringWord::word(std::move(ls));
  if (!validate_string(A, w)) return std::nullopt;
  return w;
}

std::vector<Letter> concat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Candidate {
  std::vector<StringWord> middle;
  std::string kind;
};

// Middle terms for 0 -> M(w) -> ? -> M(v) -> 0: one string joining w and v by
// an arrow, or two strings exchanging tails at a common substring.
std::vector<Candidate> candidates(const GentleAlgebra& A, const StringWord& w, const StringWord& v) {
  std::vector<Candidate> out;
  std::set<std::vector<StringWord>> seen;
  auto target = dimension_vector(A, w);
  for (const auto& [u, d] : dimension_vector(A, v)) target[u] += d;
  auto push = [&](std::vector<StringWord> mid, const char* kind) {
    std::map<ArcId, int> d;
    for (const auto& m : mid)
      for (const auto& [u, k] : dimension_vector(A, m)) d[u] += k;
    if (d != target) return;
    for (auto& m : mid) m = canonical_form(m);
    std::sort(mid.begin(), mid.end());
    if (seen.insert(mid).second) out.push_back({std::move(mid), kind});
  };

  const int Lw = letter_count(w);
  const auto vw = vertex_sequence(A, w);
  for (const StringWord& b : {v, inverse(v)}) {
    for (const StringWord& a : {w, inverse(w)}) {
      const ArcId e = end_vertex(A, a), s = start_vertex(A, b);
      for (const Arrow& arr : A.quiver().arrows)
        for (bool inv : {false, true}) {
          const Letter l{arr.id, inv};
          if (A.from(l) != e || A.to(l) != s) continue;
          if (auto u = make_string(A, concat(concat(a.letters, {l}), b.letters), 0)) push({*u}, "arrow");
        }
    }
    const int Lb = letter_count(b);
    const auto vb = vertex_sequence(A, b);
    for (int i = 0; i <= Lw; ++i)
      for (int j = i; j <= Lw; ++j)
        for (int k = 0; k + (j - i) <= Lb; ++k) {
          const Interval I{i, j}, J{k, k + j - i};
          if (i == j ? vw[i] != vb[k] : segment(w, I) != segment(b, J)) continue;
          // w = P C Q and b = R C S give P C S and R C Q
          std::vector<Letter> m1 = concat(segment(w, {0, j}), segment(b, {J.end, Lb}));
          std::vector<Letter> m2 = concat(segment(b, {0, J.end}), segment(w, {j, Lw}));
          if (m1 == segment(w, {0, Lw})) continue;
          auto s1 = make_string(A, m1, vw[i]), s2 = make_string(A, m2, vw[i]);
          if (s1 && s2) push({*s1, *s2}, "overlap");
        }
  }
  return out;
}

std::optional<ExtWitness> module_witness(const ModelPtr& m, const ObjectC& l, const ObjectC& r) {
  const GentleAlgebra& A = m->alg;
  const StringWord w = l.word(), v = r.word();
  const auto L = string_module<Rational>(A, w), R = string_module<Rational>(A, v);
  for (const auto& c : candidates(A, w, v)) {
    std::vector<Representation<Rational>> mids;
    for (const auto& u : c.middle) mids.push_back(string_module<Rational>(A, u));
    auto rep = verify_exact_nonsplit(A, L, mids, R);
    if (!rep.certified) continue;
    rep.reason = c.kind;
    ExtWitness wit{m, {}, l, {}, r, rep};
    for (const auto& u : c.middle) wit.middle.push_back(string_object(m, u));
    return wit;
  }
  return std::nullopt;
}

int module_dim_at(const ObjectC& z, ArcId i) {
  if (z.kind != ObjectC::Kind::String) return 0;
  return dimension_vector(z.model->alg, z.word()).at(i);
}

// Ext^1(T_i, z) = M(z)_i. If z is the flip of T_i the middle terms are
// quadrilateral sides.
std::optional<ExtWitness> arc_witness(const ModelPtr& m, const ObjectC& arc, const ObjectC& z) {
  const ArcId i = arc.arc();
  const int d = module_dim_at(z, i);
  if (d == 0) return std::nullopt;
  ExtWitness wit{m, {}, z, {}, arc, {}};
  wit.report.exact_found = true;
  wit.report.certified = true;
  wit.report.reason = "arc: Ext^1(T_" + std::to_string(i) + ", y) = " + std::to_string(d);
  const Triangulation& t = m->tri;
  const FlipResult fr = flip(t, i, i);
  const ObjectC moved = transport_object(make_model(fr.tri), t, fr, z);
  if (moved.kind == ObjectC::Kind::Arc && moved.arc() == i) {
    const auto sl = t.slots(i);
    const std::vector<std::vector<Slot>> pairs = {
        {{sl[0].tri, (sl[0].side + 1) % 3}, {sl[1].tri, (sl[1].side + 1) % 3}},
        {{sl[0].tri, (sl[0].side + 2) % 3}, {sl[1].tri, (sl[1].side + 2) % 3}}};
    for (const auto& pair : pairs) {
      std::vector<ObjectC> mid;
      bool fits = true;
      for (Slot s : pair) {
        const ObjectC side = object_of_curve(m, side_curve(s));
        if (side.is_zero()) continue;
        fits = fits && hom_c_dim(z, side) > 0 && hom_c_dim(side, arc) > 0;
        mid.push_back(side);
      }
      if (fits) {
        wit.middle = mid;
        wit.report.reason = "exchange pair";
        break;
      }
    }
  }
  return wit;
}

template <typename Try>
std::optional<ExtWitness> search_flips(const ObjectC& x, const ObjectC& y, Try attempt) {
  struct Node {
    ModelPtr model;
    std::vector<ArcId> flips;
    ObjectC x, y;
  };
  const int budget = static_cast<int>(x.model->tri.internal_arcs().size());
  std::deque<Node> queue{{x.model, {}, x, y}};
  std::set<std::string> seen{to_json(x.model->tri)};
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (auto w = attempt(n.model, n.x, n.y)) {
      w->flips_used = n.flips;
      return w;
    }
    if (static_cast<int>(n.flips.size()) == budget) continue;
    std::vector<ArcId> arcs = n.model->tri.internal_arcs();
    std::sort(arcs.begin(), arcs.end());
    for (ArcId a : arcs) {
      const FlipResult fr = flip(n.model->tri, a, a);
      if (!seen.insert(to_json(fr.tri)).second) continue;
      ModelPtr next = make_model(fr.tri);
      Node child{next, n.flips, transport_object(next, n.model->tri, fr, n.x),
                 transport_object(next, n.model->tri, fr, n.y)};
      child.flips.push_back(a);
      queue.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

void require_curve(const ObjectC& x) {
  reject_bands(x);
  if (x.is_zero()) throw Error(ErrorCode::ZeroObject, "zero object has no extensions");
}

}  // namespace

ExtWitness smooth_crossing(const ObjectC& x, const ObjectC& y) {
  require_curve(x);
  require_curve(y);
  auto found = search_flips(x, y, [](const ModelPtr& m, const ObjectC& a, const ObjectC& b) -> std::optional<ExtWitness> {
    using K = ObjectC::Kind;
    if (a.kind == K::String && b.kind == K::String) {
      if (auto w = module_witness(m, a, b)) return w;
      return module_witness(m, b, a);
    }
    if (a.kind == K::Arc && b.kind == K::String) return arc_witness(m, a, b);
    if (b.kind == K::Arc && a.kind == K::String) return arc_witness(m, b, a);
    return std::nullopt;
  });
  if (!found) throw Error(ErrorCode::NoCrossingPatternFound, "no crossing pattern within the flip budget");
  return *found;
}

ExtWitness resolve_self_crossing(const ObjectC& x) {
  require_curve(x);
  auto found = search_flips(x, x, [](const ModelPtr& m, const ObjectC& a, const ObjectC&) -> std::optional<ExtWitness> {
    if (a.kind != ObjectC::Kind::String) return std::nullopt;
    return module_witness(m, a, a);
  });
  if (!found) throw Error(ErrorCode::NoSelfCrossingPatternFound, "no self-crossing pattern within the flip budget");
  return *found;
}

}  // namespace surfcat
