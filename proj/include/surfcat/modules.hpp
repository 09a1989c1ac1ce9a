#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "surfcat/linalg.hpp"
#include "surfcat/strings.hpp"

namespace surfcat {

// A representation of the quiver: one vector space per vertex (in the
// algebra's vertex order) and one matrix per arrow, dim(target) x dim(source).
template <typename Scalar>
struct Representation {
  std::vector<int> dims;
  std::map<int, Mat<Scalar>> maps;

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
};

// Per-vertex components of a module map.
template <typename Scalar>
using Morphism = std::vector<Mat<Scalar>>;

namespace detail {

inline int vindex(const GentleAlgebra& A, ArcId v) { return A.quiver().vertex_index(v); }

template <typename Scalar>
Representation<Scalar> zero_rep(const GentleAlgebra& A, const std::vector<int>& dims) {
  Representation<Scalar> r;
  r.dims = dims;
  for (const auto& a : A.quiver().arrows)
    r.maps[a.id] = Mat<Scalar>::Zero(dims[vindex(A, a.target)], dims[vindex(A, a.source)]);
  return r;
}

}  // namespace detail

template <typename Scalar>
Representation<Scalar> string_module(const GentleAlgebra& A, const StringWord& w) {
  std::vector<int> dims(A.vertices().size(), 0);
  const auto seq = vertex_sequence(A, w);
  std::vector<int> local;
  for (ArcId v : seq) local.push_back(dims[detail::vindex(A, v)]++);
  auto r = detail::zero_rep<Scalar>(A, dims);
  for (int p = 0; p < w.length(); ++p) {
    const Letter l = w.letters[p];
    if (l.inverse)
      r.maps[l.arrow](local[p], local[p + 1]) = Scalar(1);
    else
      r.maps[l.arrow](local[p + 1], local[p]) = Scalar(1);
  }
  return r;
}

template <typename Scalar>
Representation<Scalar> band_module(const GentleAlgebra& A, const Band& b, int n, const Scalar& lambda) {
  if (lambda == Scalar(0)) throw Error(ErrorCode::ZeroParameter, "band parameter must be nonzero");
  if (n < 1) throw Error(ErrorCode::MalformedSpec, "band multiplicity must be positive");
  const int m = static_cast<int>(b.letters.size());
  std::vector<int> dims(A.vertices().size(), 0);
  std::vector<int> offset;
  for (int p = 0; p < m; ++p) {
    int vi = detail::vindex(A, A.from(b.letters[p]));
    offset.push_back(dims[vi]);
    dims[vi] += n;
  }
  auto r = detail::zero_rep<Scalar>(A, dims);
  for (int p = 0; p < m; ++p) {
    const Letter l = b.letters[p];
    Mat<Scalar> blk = Mat<Scalar>::Identity(n, n);
    if (p == m - 1) {
      for (int i = 0; i < n; ++i) blk(i, i) = lambda;
      for (int i = 0; i + 1 < n; ++i) blk(i, i + 1) = Scalar(1);
    }
    const int here = offset[p], there = offset[(p + 1) % m];
    if (l.inverse)
      r.maps[l.arrow].block(here, there, n, n) = blk;
    else
      r.maps[l.arrow].block(there, here, n, n) = blk;
  }
  return r;
}

template <typename Scalar>
Representation<Scalar> direct_sum(const GentleAlgebra& A, const std::vector<Representation<Scalar>>& parts) {
  std::vector<int> dims(A.vertices().size(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims[v];
  auto r = detail::zero_rep<Scalar>(A, dims);
  std::vector<int> at(dims.size(), 0);
  for (const auto& p : parts) {
    for (const auto& a : A.quiver().arrows) {
      int s = detail::vindex(A, a.source), t = detail::vindex(A, a.target);
      r.maps[a.id].block(at[t], at[s], p.dims[t], p.dims[s]) = p.maps.at(a.id);
    }
    for (std::size_t v = 0; v < dims.size(); ++v) at[v] += p.dims[v];
  }
  return r;
}

template <typename Scalar>
bool satisfies_relations(const GentleAlgebra& A, const Representation<Scalar>& m) {
  for (const auto& [x, y] : A.qp().relations.forbidden_pairs) {
    Mat<Scalar> c = m.maps.at(y) * m.maps.at(x);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (c(i) != Scalar(0)) return false;
  }
  return true;
}

// Basis of Hom(M, N): maps f with N_a f_source = f_target M_a for every arrow.
template <typename Scalar>
std::vector<Morphism<Scalar>> hom_basis(const GentleAlgebra& A, const Representation<Scalar>& M,
                                        const Representation<Scalar>& N) {
  const int nv = static_cast<int>(M.dims.size());
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  int rows = 0;
  for (const auto& a : A.quiver().arrows)
    rows += N.dims[detail::vindex(A, a.target)] * M.dims[detail::vindex(A, a.source)];
  Mat<Scalar> sys = Mat<Scalar>::Zero(rows, off[nv]);
  // unknown (i, j) of f_v sits at column off[v] + i + j * dimN_v
  int row = 0;
  for (const auto& a : A.quiver().arrows) {
    const int s = detail::vindex(A, a.source), t = detail::vindex(A, a.target);
    const auto& Ma = M.maps.at(a.id);
    const auto& Na = N.maps.at(a.id);
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j, ++row) {
        for (int k = 0; k < N.dims[s]; ++k)
          if (Na(i, k) != Scalar(0)) sys(row, off[s] + k + j * N.dims[s]) += Na(i, k);
        for (int k = 0; k < M.dims[t]; ++k)
          if (Ma(k, j) != Scalar(0)) sys(row, off[t] + i + k * N.dims[t]) -= Ma(k, j);
      }
  }
  Mat<Scalar> ns = nullspace<Scalar>(sys);
  std::vector<Morphism<Scalar>> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    Morphism<Scalar> f(nv);
    for (int v = 0; v < nv; ++v) {
      f[v] = Mat<Scalar>(N.dims[v], M.dims[v]);
      for (int j = 0; j < M.dims[v]; ++j)
        for (int i = 0; i < N.dims[v]; ++i) f[v](i, j) = ns(off[v] + i + j * N.dims[v], c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <typename Scalar>
int hom_dim(const GentleAlgebra& A, const Representation<Scalar>& M, const Representation<Scalar>& N) {
  return static_cast<int>(hom_basis(A, M, N).size());
}

// dim Ext^1(M, N), extensions 0 -> N -> E -> M -> 0, as cocycles modulo coboundaries.
template <typename Scalar>
int ext1_dim(const GentleAlgebra& A, const Representation<Scalar>& M, const Representation<Scalar>& N) {
  std::map<int, int> off;
  int cols = 0;
  for (const auto& a : A.quiver().arrows) {
    off[a.id] = cols;
    cols += N.dims[detail::vindex(A, a.target)] * M.dims[detail::vindex(A, a.source)];
  }
  int rows = 0;
  for (const auto& [x, y] : A.qp().relations.forbidden_pairs)
    rows += N.dims[detail::vindex(A, A.quiver().arrow(y).target)] *
            M.dims[detail::vindex(A, A.quiver().arrow(x).source)];
  Mat<Scalar> sys = Mat<Scalar>::Zero(rows, cols);
  int row = 0;
  for (const auto& [x, y] : A.qp().relations.forbidden_pairs) {
    // N_y g_x + g_y M_x = 0
    const int sx = detail::vindex(A, A.quiver().arrow(x).source);
    const int mid = detail::vindex(A, A.quiver().arrow(x).target);
    const int ty = detail::vindex(A, A.quiver().arrow(y).target);
    const auto& Ny = N.maps.at(y);
    const auto& Mx = M.maps.at(x);
    for (int i = 0; i < N.dims[ty]; ++i)
      for (int j = 0; j < M.dims[sx]; ++j, ++row) {
        for (int k = 0; k < N.dims[mid]; ++k)
          if (Ny(i, k) != Scalar(0)) sys(row, off[x] + k + j * N.dims[mid]) += Ny(i, k);
        for (int k = 0; k < M.dims[mid]; ++k)
          if (Mx(k, j) != Scalar(0)) sys(row, off[y] + i + k * N.dims[ty]) += Mx(k, j);
      }
  }
  int cocycles = cols - rank<Scalar>(sys);
  int cochains0 = 0;
  for (std::size_t v = 0; v < M.dims.size(); ++v) cochains0 += M.dims[v] * N.dims[v];
  int coboundaries = cochains0 - hom_dim(A, M, N);
  return cocycles - coboundaries;
}

template <typename Scalar>
Morphism<Scalar> compose(const Morphism<Scalar>& g, const Morphism<Scalar>& f) {
  Morphism<Scalar> h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = g[v] * f[v];
  return h;
}

// The whole map as one block-diagonal matrix.
template <typename Scalar>
Mat<Scalar> total_matrix(const Morphism<Scalar>& f) {
  Eigen::Index r = 0, c = 0;
  for (const auto& m : f) {
    r += m.rows();
    c += m.cols();
  }
  Mat<Scalar> out = Mat<Scalar>::Zero(r, c);
  r = c = 0;
  for (const auto& m : f) {
    out.block(r, c, m.rows(), m.cols()) = m;
    r += m.rows();
    c += m.cols();
  }
  return out;
}

template <typename Scalar>
Mat<Scalar> flatten(const Morphism<Scalar>& f) {
  Eigen::Index n = 0;
  for (const auto& m : f) n += m.size();
  Mat<Scalar> v(n, 1);
  n = 0;
  for (const auto& m : f)
    for (Eigen::Index i = 0; i < m.size(); ++i) v(n++, 0) = m(i);
  return v;
}

namespace detail {

template <typename Scalar>
Morphism<Scalar> combine(const std::vector<Morphism<Scalar>>& basis, const std::vector<Scalar>& coeff) {
  Morphism<Scalar> f = basis[0];
  for (auto& m : f) m.setZero();
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t v = 0; v < f.size(); ++v) f[v] += coeff[k] * basis[k][v];
  return f;
}

template <typename Scalar>
std::vector<Scalar> random_coefficients(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 997);
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Scalar(d(rng)));
  return c;
}

}  // namespace detail

struct ExactnessReport {
  bool exact_found = false;
  bool split = false;
  bool certified = false;
  std::string reason;
};

// Looks for f: L -> B injective and g: B -> R surjective with g f = 0 and
// dim B = dim L + dim R, then checks that f has no retraction.
template <typename Scalar>
ExactnessReport verify_exact_nonsplit(const GentleAlgebra& A, const Representation<Scalar>& L,
                                      const std::vector<Representation<Scalar>>& middle,
                                      const Representation<Scalar>& R, int attempts = 6) {
  ExactnessReport rep;
  const auto B = direct_sum(A, middle);
  for (std::size_t v = 0; v < B.dims.size(); ++v)
    if (B.dims[v] != L.dims[v] + R.dims[v]) {
      rep.reason = "NoExactStructureFound: dimension vectors do not add up";
      return rep;
    }
  const auto hf = hom_basis(A, L, B);
  const auto hg = hom_basis(A, B, R);
  if (hf.empty() || (hg.empty() && R.total_dim() > 0)) {
    rep.reason = "NoExactStructureFound: no maps";
    return rep;
  }
  std::mt19937 rng(20240611);
  for (int attempt = 0; attempt < attempts && !rep.exact_found; ++attempt) {
    auto f = detail::combine(hf, detail::random_coefficients<Scalar>(rng, hf.size()));
    if (rank<Scalar>(total_matrix(f)) != L.total_dim()) continue;
    Morphism<Scalar> g;
    if (R.total_dim() > 0) {
      // coefficients c with (sum c_k g_k) f = 0
      Mat<Scalar> sys;
      for (std::size_t k = 0; k < hg.size(); ++k) {
        Mat<Scalar> col = flatten(compose(hg[k], f));
        if (k == 0) sys = Mat<Scalar>(col.rows(), hg.size());
        sys.col(k) = col;
      }
      Mat<Scalar> cs = nullspace<Scalar>(sys);
      if (cs.cols() == 0) continue;
      std::vector<Morphism<Scalar>> gbasis;
      for (Eigen::Index j = 0; j < cs.cols(); ++j) {
        std::vector<Scalar> c(hg.size());
        for (std::size_t k = 0; k < hg.size(); ++k) c[k] = cs(k, j);
        gbasis.push_back(detail::combine(hg, c));
      }
      g = detail::combine(gbasis, detail::random_coefficients<Scalar>(rng, gbasis.size()));
      if (rank<Scalar>(total_matrix(g)) != R.total_dim()) continue;
    }
    rep.exact_found = true;
    // a retraction r with r f = id_L would split the sequence
    const auto hr = hom_basis(A, B, L);
    Morphism<Scalar> id(L.dims.size());
    for (std::size_t v = 0; v < L.dims.size(); ++v) id[v] = Mat<Scalar>::Identity(L.dims[v], L.dims[v]);
    if (hr.empty()) {
      rep.split = L.total_dim() == 0;
    } else {
      Mat<Scalar> sys;
      for (std::size_t k = 0; k < hr.size(); ++k) {
        Mat<Scalar> col = flatten(compose(hr[k], f));
        if (k == 0) sys = Mat<Scalar>(col.rows(), hr.size());
        sys.col(k) = col;
      }
      rep.split = solve<Scalar>(sys, flatten(id)).has_value();
    }
  }
  if (!rep.exact_found) {
    rep.reason = "NoExactStructureFound: no exact pair of maps";
    return rep;
  }
  rep.certified = !rep.split;
  rep.reason = rep.split ? "split" : "";
  return rep;
}

}  // namespace surfcat
