#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace surfcat {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Exact Gauss-Jordan elimination. Pivots are the first nonzero entry, which
// is fine for exact scalars; rows are mostly zero here, so zero multipliers
// are skipped.
template <typename Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
  const Scalar zero(0);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Echelon<Scalar> e;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == zero) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index k = c; k < cols; ++k)
      if (m(r, k) != zero) m(r, k) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == zero) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index k = c; k < cols; ++k)
        if (m(r, k) != zero) m(i, k) -= f * m(r, k);
    }
    e.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

template <typename Scalar>
int rank(const Mat<Scalar>& m) {
  return static_cast<int>(rref<Scalar>(m).pivots.size());
}

// Columns form a basis of {x : m x = 0}.
template <typename Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& m) {
  const auto e = rref<Scalar>(m);
  const Eigen::Index cols = m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], static_cast<Eigen::Index>(j)) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis(e.pivots[i], static_cast<Eigen::Index>(j)) = -e.reduced(static_cast<Eigen::Index>(i), free[j]);
  }
  return basis;
}

// Some x with a x = b, if one exists.
template <typename Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto e = rref<Scalar>(aug);
  for (int c : e.pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat<Scalar> x = Mat<Scalar>::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x.row(e.pivots[i]) = e.reduced.block(static_cast<Eigen::Index>(i), a.cols(), 1, b.cols());
  return x;
}

}  // namespace surfcat
