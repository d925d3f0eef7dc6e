#pragma once

#include <optional>
#include <vector>

#include "propeq/matrix.hpp"

namespace propeq::linalg {

/// Reduced row echelon form over the rationals; `pivots` lists pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(RatMatrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    m.scale_row(row, Rational(1) / m(row, col));
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != row && m(r, col) != 0) m.add_row(r, row, -m(r, col));
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of the null space, in the canonical free-variable order.
inline RatMatrix nullspace(const RatMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free_cols[k]);
  }
  return basis;
}

/// A basis of the column space, taken from the original pivot columns.
inline RatMatrix column_basis(const RatMatrix& m) {
  const Echelon e = rref(m);
  RatMatrix b(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, e.pivots[k]);
  return b;
}

/// Canonical basis of the column space: transposed nonzero rows of the RREF of mᵀ.
inline RatMatrix canonical_column_basis(const RatMatrix& m) {
  const Echelon e = rref(m.transpose());
  RatMatrix b(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = e.reduced(k, i);
  return b;
}

/// Solves a x = b; empty when inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

/// Solves a X = b column by column; throws when some column is inconsistent.
inline RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(a, b.column(j));
    if (!col) fail(ErrorKind::InvalidArgument, "linear system has no solution");
    for (std::size_t i = 0; i < a.cols(); ++i) x(i, j) = (*col)[i];
  }
  return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug = hconcat(m, RatMatrix::identity(n));
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

/// Left inverse of a full-column-rank matrix: L * m = I.
inline RatMatrix left_inverse(const RatMatrix& m) {
  const RatMatrix mt = m.transpose();
  auto g = inverse(mt * m);
  if (!g) fail(ErrorKind::InvalidArgument, "left_inverse: matrix lacks full column rank");
  return *g * mt;
}

/// Quotient of Q^n by the column span of `sub`: returns (projection q, section s)
/// with q * sub = 0, q * s = I. The quotient basis is the images of the standard
/// basis vectors not among the pivots of [sub | I].
struct Quotient {
  RatMatrix projection;
  RatMatrix section;
};

inline Quotient quotient_by(const RatMatrix& sub, std::size_t n) {
  RatMatrix aug = hconcat(sub.cols() ? sub : RatMatrix(n, 0), RatMatrix::identity(n));
  const Echelon e = rref(aug);
  std::vector<std::size_t> chosen;
  std::size_t sub_rank = 0;
  for (auto p : e.pivots) {
    if (p < sub.cols())
      ++sub_rank;
    else
      chosen.push_back(p - sub.cols());
  }
  const std::size_t d = chosen.size();
  // basis of Q^n: [sub pivots..., chosen unit vectors...]
  RatMatrix basis(n, sub_rank + d);
  std::size_t k = 0;
  for (auto p : e.pivots) {
    if (p < sub.cols()) {
      for (std::size_t i = 0; i < n; ++i) basis(i, k) = sub(i, p);
    } else {
      basis(p - sub.cols(), k) = 1;
    }
    ++k;
  }
  auto inv = inverse(basis);
  if (!inv) fail(ErrorKind::InvalidArgument, "quotient_by: degenerate basis");
  Quotient q;
  q.projection = inv->block(sub_rank, 0, d, n);
  q.section = RatMatrix(n, d);
  for (std::size_t c = 0; c < d; ++c) q.section(chosen[c], c) = 1;
  return q;
}

}  // namespace propeq::linalg
