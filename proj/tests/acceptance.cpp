// One line per criterion; exit status is the number of failures.
#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "surfcat/mutation.hpp"

using namespace surfcat;

namespace {

using Rep = Representation<Rational>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

Triangulation example() { return load_triangulation(fixture("annulus_example.json")); }

Triangulation genus_one() { return load_triangulation(fixture("genus1.json")); }

// The two string fixtures: the annulus of the worked example and the standard annulus(2,3).
std::vector<Triangulation> string_fixtures() { return {example(), load_triangulation(fixture("annulus23.json"))}; }

std::vector<Triangulation> all_fixtures() {
  return {example(), load_triangulation(fixture("annulus23.json")), canonical_polygon(6), canonical_polygon(7),
          genus_one()};
}

Rep module(const GentleAlgebra& A, const StringWord& w) { return string_module<Rational>(A, w); }

std::vector<int> dims(const ObjectC& x) { return module_of(x).dims; }

int word_length(const ObjectC& x) { return x.kind == ObjectC::Kind::String ? x.word().length() : 0; }

std::set<std::string> keys(const std::vector<ObjectC>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(object_key(x));
  return out;
}

void arc_count(Outcome& o) {
  std::vector<Triangulation> grid;
  for (int c = 4; c <= 8; ++c) grid.push_back(canonical_polygon(c));
  for (int t1 = 1; t1 <= 5; ++t1)
    for (int t2 = 1; t1 + t2 <= 6; ++t2) grid.push_back(canonical_annulus(t1, t2));
  grid.push_back(genus_one());
  for (const auto& t : grid) {
    const auto inv = t.invariants();
    const int expected = 6 * inv.genus + 3 * inv.boundary_components + inv.marked_points - 6;
    o.require(t.internal_arc_count() == expected, "surface " + to_json(t));
  }
  o.detail << grid.size() << " surfaces";
}

void example_reconstruction(Outcome& o) {
  const GentleAlgebra A(example());
  o.require(A.quiver().vertices.size() == 5, "5 vertices");
  o.require(A.qp().potential.cycles.size() == 1, "one 3-cycle");
  const StringWord g = parse_string("w:1,-4,-3,2,1");
  o.require(validate_string(A, g), "curve word valid");
  o.require(vertex_sequence(A, g) == std::vector<ArcId>{3, 4, 2, 1, 3, 4}, "crossing sequence");
  o.require(module(A, g).dims == std::vector<int>{1, 1, 2, 2, 0}, "dims");
  o.detail << "vertices 5, cycles 1, sequence (3,4,2,1,3,4), dims (1,1,2,2,0)";
}

void example_ar_sequence(Outcome& o) {
  const GentleAlgebra A(example());
  const auto seq = ar_sequence(A, parse_string("w:1,-4,-3,2,1"));
  std::multiset<std::vector<int>> mid_dims;
  std::vector<Rep> mid;
  for (const auto& w : seq.middle) {
    mid.push_back(module(A, w));
    mid_dims.insert(mid.back().dims);
  }
  o.require(mid_dims == std::multiset<std::vector<int>>{{2, 2, 2, 3, 0}, {1, 2, 2, 2, 0}}, "middle dims");
  o.require(module(A, seq.right).dims == std::vector<int>{2, 3, 2, 3, 0}, "end dims");
  const auto rep = verify_exact_nonsplit(A, module(A, seq.left), mid, module(A, seq.right));
  o.require(rep.certified, "certified: " + rep.reason);
  o.detail << "certified exact non-split";
}

void butler_ringel(Outcome& o) {
  int checked = 0;
  for (const auto& t : string_fixtures()) {
    const GentleAlgebra A(t);
    for (const auto& w : enumerate_strings(A, 8)) {
      if (is_injective_string(A, w)) continue;
      const auto seq = ar_sequence(A, w);
      o.require(seq.middle.size() <= 2, "at most two middle terms for " + format(w));
      std::vector<Rep> mid;
      for (const auto& m : seq.middle) mid.push_back(module(A, m));
      const auto rep = verify_exact_nonsplit(A, module(A, seq.left), mid, module(A, seq.right));
      o.require(rep.certified, format(w) + ": " + rep.reason);
      ++checked;
    }
  }
  o.detail << checked << " sequences certified";
}

void pivot_hooks(Outcome& o) {
  int checked = 0;
  for (const auto& t : all_fixtures()) {
    const auto m = make_model(t);
    const auto& A = m->alg;
    for (const auto& w : enumerate_strings(A, 6))
      for (const auto& w0 : {w, inverse(w)}) {
        const ObjectC x = string_object(m, w0);
        const auto st = peak_deep_status(A, w0);
        for (End at : {End::Start, End::Finish}) {
          const bool peak = at == End::Start ? st.starts_on_peak : st.ends_on_peak;
          const StringWord want = peak ? delete_cohook(A, w0, at) : add_hook(A, w0, at);
          const ObjectC got = at == End::Start ? pivot_start(x) : pivot_end(x);
          if (want.is_zero())
            o.require(got.kind != ObjectC::Kind::String, "zero move at " + format(w0));
          else
            o.require(got.kind == ObjectC::Kind::String && got.word() == want, "move at " + format(w0));
          ++checked;
        }
      }
  }
  // diagonals (i, j) of the hexagon: pivot_end gives (i, j + 1)
  const int c = 6;
  const auto m = make_model(canonical_polygon(c));
  const auto objs = enumerate_objects(m, 2 * c);
  o.require(objs.size() == 9, "9 diagonals");
  for (const auto& x : objs) {
    const int i = x.start_point(), j = x.end_point();
    const ObjectC y = pivot_end(x);
    const int j1 = (j + 1) % c;
    if (j1 == (i + c - 1) % c)
      o.require(y.is_zero(), "boundary segment is zero");
    else
      o.require(!y.is_zero() && y.start_point() == i && y.end_point() == j1, "diagonal rotation " + format(x));
    ++checked;
  }
  o.detail << checked << " pivots";
}

void shift_coherence(Outcome& o) {
  int checked = 0;
  for (const auto& t : all_fixtures()) {
    const auto m = make_model(t);
    for (const auto& x : enumerate_objects(m, 6)) {
      if (x.kind == ObjectC::Kind::Band) continue;
      o.require(object_equal(shift(x, -1), object_of_curve(m, pivot_start(t, pivot_end(t, x.curve)))),
                "shift is both pivots at " + format(x));
      const ObjectC e = pivot_end(x);
      if (!e.is_zero()) o.require(object_equal(shift(x, -1), pivot_start(e)), "object pivots at " + format(x));
      o.require(object_equal(shift(shift(x, -1), 1), x), "inverse at " + format(x));
      ++checked;
    }
    for (ArcId a : t.internal_arcs()) {
      const ObjectC p = shift(arc_object(m, a), -1);
      o.require(p.kind == ObjectC::Kind::String &&
                    canonical_form(p.word()) == canonical_form(projective_string(m->alg, a)),
                "projective at arc " + std::to_string(a));
    }
  }
  o.detail << checked << " objects";
}

void tubes(Outcome& o) {
  const auto m = make_model(canonical_annulus(2, 3));
  const auto& t = m->tri;
  std::vector<int> ranks;
  for (const auto& comp : t.boundary_components()) {
    const int rank = static_cast<int>(comp.size());
    ranks.push_back(rank);
    for (int mp : comp) {
      Curve c = boundary_curve(t, t.arc_at(t.boundary_out(mp)));
      for (int level = 1; level <= 4; ++level) {
        c = pivot_end(t, c);
        const ObjectC x = object_of_curve(m, c);
        if (x.is_zero()) {
          o.require(false, "nonzero pivot orbit");
          continue;
        }
        for (int k = 1; k < rank; ++k) o.require(!object_equal(shift(x, -k), x), "period");
        o.require(object_equal(shift(x, -rank), x), "period equals rank");
        const auto cl = component_classify(x);
        o.require(cl.kind == Component::Kind::BoundaryTube && cl.rank == rank && cl.level == level, "classified");
        o.require(ar_triangle(x).middle.size() == (level == 1 ? 1u : 2u), "mouth has one middle term");
      }
    }
  }
  std::sort(ranks.begin(), ranks.end());
  o.require(ranks == std::vector<int>{2, 3}, "ranks 2 and 3");
  int bands = 0;
  for (const auto& b : enumerate_bands(m->alg, 12))
    for (int n = 1; n <= 3; ++n)
      for (const Rational& l : {Rational(1), Rational(2), Rational(-1, 3)}) {
        const ObjectC x = band_object(m, b, n, l);
        o.require(component_classify(x).kind == Component::Kind::HomogeneousTube, "homogeneous tube");
        const auto tr = ar_triangle(x);
        std::multiset<int> ns;
        for (const auto& y : tr.middle) {
          o.require(y.kind == ObjectC::Kind::Band && y.lambda == l, "middle in the same tube");
          ns.insert(y.n);
        }
        o.require(ns == (n == 1 ? std::multiset<int>{2} : std::multiset<int>{n - 1, n + 1}), "middle terms");
        o.require(object_equal(tr.target, x), "band fixed by shift");
        ++bands;
      }
  o.detail << "ranks (2,3), " << bands << " band objects";
}

void example_hom(Outcome& o) {
  const auto m = make_model(example());
  const ObjectC gamma = parse_object(m, "w:5,-3,2,1"), delta = parse_object(m, "w:-3,2,1,6");
  const int hj = hom_j_dim(m->alg, gamma.word(), delta.word()), hc = hom_c_dim(gamma, delta);
  o.require(hj == 1, "Hom_J = 1");
  o.require(hc == 2, "Hom_C = 2");
  const FlipResult fr = flip(m->tri, 5);
  const auto next = make_model(fr.tri);
  o.require(next->alg.qp().potential.cycles.empty(), "zero potential after the flip");
  for (const auto& x : {gamma, delta}) {
    const ObjectC y = transport_object(next, m->tri, fr, x);
    o.require(y.kind == ObjectC::Kind::String && dims(y) == std::vector<int>{1, 1, 1, 1, 1}, "dims (1,1,1,1,1)");
  }
  o.detail << "Hom_J " << hj << ", Hom_C " << hc;
}

// dim Hom(M_x, tau M_y) + dim Hom(M_y, tau M_x) by the matrix solver.
int ext_by_tau(const ModelPtr& m, const StringWord& x, const StringWord& y) {
  const auto& A = m->alg;
  auto half = [&](const StringWord& a, const StringWord& b) {
    if (is_projective_string(A, b)) return 0;
    return hom_dim(A, module(A, a), module(A, tau_j(m, b, 1)));
  };
  return half(x, y) + half(y, x);
}

void remark_ext(Outcome& o) {
  const auto m = make_model(example());
  const ObjectC delta = parse_object(m, "w:-3,2,1,6");
  const int ej = ext1_dim(m->alg, module_of(delta), module_of(delta));
  const int ec = ext1_c_dim(delta, delta);
  o.require(ej == 0, "Ext_J(delta, delta) = 0");
  o.require(ec != 0, "Ext_C(delta, delta) nonzero");
  const int tau_route = ext_by_tau(m, delta.word(), delta.word());
  const FlipResult fr = flip(m->tri, 5);
  const auto next = make_model(fr.tri);
  const ObjectC moved = transport_object(next, m->tri, fr, delta);
  const int ej_flipped = ext1_dim(next->alg, module_of(moved), module_of(moved));
  const int flip_route = ext_by_tau(next, moved.word(), moved.word());
  o.require(ej_flipped != 0, "Ext_J' nonzero after the flip");
  o.require(tau_route == ec && flip_route == ec && ext1_c_dim(moved, moved) == ec, "routes agree");
  o.detail << "Ext_J 0, Ext_C " << ec << ", tau route " << tau_route << ", after flip Ext_J' " << ej_flipped
           << " tau route " << flip_route;
}

void flip_is_mutation(Outcome& o) {
  std::mt19937 rng(20261016);
  for (const auto& base : {canonical_annulus(2, 3), canonical_polygon(7)}) {
    const auto m0 = make_model(base);
    auto T = cluster_of(m0);
    Triangulation cur = base;
    Quiver q = m0->alg.qp().quiver;
    std::vector<std::pair<Triangulation, FlipResult>> hist;
    auto carry = [&](std::vector<ObjectC> xs) {
      for (const auto& [before, fr] : hist) {
        const auto next = make_model(fr.tri);
        for (auto& x : xs) x = transport_object(next, before, fr, x);
      }
      return xs;
    };
    for (int step = 0; step < 50; ++step) {
      const auto arcs = cur.internal_arcs();
      const ArcId a = arcs[rng() % arcs.size()];
      const auto fwd = carry(T.summands);
      std::size_t idx = fwd.size();
      for (std::size_t i = 0; i < fwd.size(); ++i)
        if (fwd[i].kind == ObjectC::Kind::Arc && fwd[i].arc() == a) idx = i;
      if (idx == fwd.size()) {
        o.require(false, "summand for the flipped arc");
        break;
      }
      T = mutate_ct(T, idx);
      const FlipResult fr = flip(cur, a, a);
      hist.push_back({cur, fr});
      cur = fr.tri;
      // mu_i(T) carried to the new triangulation is exactly its arcs
      const auto now = make_model(cur);
      std::vector<ObjectC> arcs_now;
      for (ArcId b : cur.internal_arcs()) arcs_now.push_back(arc_object(now, b));
      o.require(keys(carry(T.summands)) == keys(arcs_now), "mutation equals flip at step " + std::to_string(step));
      q = quiver_mutate_fz(q, a);
      o.require(find_isomorphism(q, qp_from_triangulation(cur).quiver).has_value(), "quiver mutation");
    }
  }
  o.detail << "2 walks of 50 steps";
}

// Objects that are arcs of some triangulation reached by flips, collected by
// mutating cluster-tilting sets on the base; sets with a summand longer than
// max_len letters are not expanded.
std::set<std::string> reachable_arcs(const ModelPtr& m, int max_len) {
  std::set<std::set<std::string>> seen;
  std::deque<ClusterTilting> todo;
  std::set<std::string> out;
  const auto T0 = cluster_of(m);
  seen.insert(keys(T0.summands));
  todo.push_back(T0);
  while (!todo.empty()) {
    const auto T = todo.front();
    todo.pop_front();
    for (const auto& x : T.summands) out.insert(object_key(x));
    for (std::size_t i = 0; i < T.summands.size(); ++i) {
      auto U = mutate_ct(T, i);
      if (word_length(U.summands[i]) > max_len) continue;
      if (seen.insert(keys(U.summands)).second) todo.push_back(std::move(U));
    }
  }
  return out;
}

void rigid_is_arc(Outcome& o) {
  std::vector<std::pair<ModelPtr, int>> cases;
  for (int c = 4; c <= 7; ++c) cases.push_back({make_model(canonical_polygon(c)), 2 * c});
  cases.push_back({make_model(canonical_annulus(2, 3)), 8});
  int objects = 0, witnesses = 0;
  for (const auto& [m, len] : cases) {
    const auto reach = reachable_arcs(m, 12);
    for (const auto& x : enumerate_objects(m, len)) {
      const bool rigid = is_rigid(x);
      o.require(rigid == (reach.count(object_key(x)) > 0), "rigid iff arc: " + format(x));
      if (!rigid) {
        const auto w = resolve_self_crossing(x);
        o.require(w.report.certified, "witness for " + format(x));
        ++witnesses;
      }
      ++objects;
    }
  }
  o.detail << objects << " objects, " << witnesses << " certified witnesses";
}

void cluster_tilting_bijection(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto base = canonical_polygon(7);
  const auto m = make_model(base);
  std::vector<ObjectC> rigid;
  for (const auto& x : enumerate_objects(m, 14))
    if (is_rigid(x)) rigid.push_back(x);
  std::set<std::string> flip_keys, found_keys;
  const auto graph = flip_graph(base);
  for (const auto& t : graph) flip_keys.insert(triangulation_key(t));
  const int n = static_cast<int>(base.internal_arcs().size()), N = static_cast<int>(rigid.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  int subsets = 0, passing = 0;
  while (true) {
    std::vector<ObjectC> s;
    for (int i : idx) s.push_back(rigid[i]);
    const auto ck = cluster_tilting_check(m, s);
    if (ck.ok) {
      ++passing;
      found_keys.insert(triangulation_key(*ck.triangulation));
      // extraction round trip: the arcs of the extracted triangulation are the objects
      const auto mt = make_model(*ck.triangulation);
      const auto again = cluster_tilting_check(mt, cluster_of(mt).summands);
      o.require(again.ok && triangulation_key(*again.triangulation) == triangulation_key(*ck.triangulation),
                "round trip");
    }
    ++subsets;
    int k = n - 1;
    while (k >= 0 && idx[k] == N - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(graph.size() == 42, "42 triangulations");
  o.require(passing == 42, "42 passing sets");
  o.require(found_keys == flip_keys, "extracted triangulations are the flip graph");
  o.require(secs <= 60, "within 60 s");
  o.detail << graph.size() << " triangulations, " << passing << " of " << subsets << " subsets pass, " << secs
           << " s";
}

void hom_oracle(Outcome& o) {
  long pairs = 0;
  for (const auto& t : string_fixtures()) {
    const GentleAlgebra A(t);
    const auto ss = enumerate_strings(A, 6);
    std::vector<Rep> mods;
    for (const auto& w : ss) mods.push_back(module(A, w));
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = 0; j < ss.size(); ++j) {
        o.require(hom_j_dim(A, ss[i], ss[j]) == hom_dim(A, mods[i], mods[j]), format(ss[i]) + " -> " + format(ss[j]));
        ++pairs;
      }
  }
  o.detail << pairs << " pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"arc count formula", arc_count},
      {"worked example reconstruction", example_reconstruction},
      {"worked example AR sequence", example_ar_sequence},
      {"AR sequences of strings up to length 8", butler_ringel},
      {"pivots add hooks or delete cohooks", pivot_hooks},
      {"shift coherence", shift_coherence},
      {"tubes", tubes},
      {"Hom across a flip", example_hom},
      {"Ext in the module and cluster categories", remark_ext},
      {"flip equals mutation", flip_is_mutation},
      {"rigid objects are arcs", rigid_is_arc},
      {"cluster tilting objects are triangulations", cluster_tilting_bijection},
      {"Hom by graph maps equals the linear solver", hom_oracle},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " (" << criteria[i].first
              << "): " << o.detail.str() << " [" << secs << " s]" << std::endl;
  }
  return failures;
}
