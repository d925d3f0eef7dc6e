#pragma once

#include <utility>
#include <vector>

#include "propeq/matrix.hpp"

namespace propeq {

/// Euclidean structure used by the Smith normal form. A specialization provides
/// `size` (the Euclidean norm), `divmod` and `unit_normalizer` (a unit u such
/// that u * a is the canonical associate of a) together with its inverse.
template <class T>
struct EuclideanTraits;

template <>
struct EuclideanTraits<Integer> {
  static Integer size(const Integer& a) { return a < 0 ? Integer(-a) : a; }
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q = a / b;
    return {q, a - q * b};
  }
  static Integer unit_normalizer(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
  static Integer unit_inverse(const Integer& u) { return u; }
};

template <class T>
struct SmithForm {
  Matrix<T> diagonal;
  /// Nonzero diagonal entries, normalized, each dividing the next.
  std::vector<T> invariants;
  std::size_t rank = 0;
  // u * a * v == diagonal
  Matrix<T> u, u_inv, v, v_inv;
};

template <class T, class Traits = EuclideanTraits<T>>
SmithForm<T> smith_normal_form(const Matrix<T>& input) {
  Matrix<T> a = input;
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<T> u = Matrix<T>::identity(m), u_inv = Matrix<T>::identity(m);
  Matrix<T> v = Matrix<T>::identity(n), v_inv = Matrix<T>::identity(n);

  auto row_add = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
    u_inv.add_col(src, dst, -f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
    u_inv.swap_cols(x, y);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_col(dst, src, f);
    v.add_col(dst, src, f);
    v_inv.add_row(src, dst, -f);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    v_inv.swap_rows(x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (!found || Traits::size(a(i, j)) < Traits::size(a(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        auto [q, r] = Traits::divmod(a(i, t), a(t, t));
        row_add(i, t, -q);
        if (r != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        auto [q, r] = Traits::divmod(a(t, j), a(t, t));
        col_add(j, t, -q);
        if (r != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) == 0) continue;
          auto [q, r] = Traits::divmod(a(i, j), a(t, t));
          (void)q;
          if (r != 0) {
            row_add(t, i, T(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    const T unit = Traits::unit_normalizer(a(t, t));
    if (unit != T(1)) {
      const T inv = Traits::unit_inverse(unit);
      a.scale_row(t, unit);
      u.scale_row(t, unit);
      u_inv.scale_col(t, inv);
    }
  }

  SmithForm<T> out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(a(i, i));
  out.diagonal = std::move(a);
  out.u = std::move(u);
  out.u_inv = std::move(u_inv);
  out.v = std::move(v);
  out.v_inv = std::move(v_inv);
  return out;
}

/// Integer lattice helpers built on the Smith form. Lattices are given by the
/// columns of a matrix.
namespace lattice {

/// Basis of the integer kernel of a.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  return s.v.block(0, s.rank, a.cols(), a.cols() - s.rank);
}

/// Basis of the lattice spanned by the columns of gens (m rows).
inline IntMatrix basis(const IntMatrix& gens) {
  const auto s = smith_normal_form(gens);
  IntMatrix b(gens.rows(), s.rank);
  for (std::size_t k = 0; k < s.rank; ++k)
    for (std::size_t i = 0; i < gens.rows(); ++i) b(i, k) = s.u_inv(i, k) * s.invariants[k];
  return b;
}

/// Integer coordinates of each column of x in the full-column-rank basis b.
inline IntMatrix coordinates(const IntMatrix& b, const IntMatrix& x) {
  const auto s = smith_normal_form(b);
  if (s.rank != b.cols()) fail(ErrorKind::InvalidArgument, "lattice basis is not of full column rank");
  const IntMatrix ux = s.u * x;
  IntMatrix y(b.cols(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      if (i < s.rank) {
        if (ux(i, j) % s.invariants[i] != 0)
          fail(ErrorKind::NonIntegralSolve, "vector does not lie in the lattice");
        y(i, j) = ux(i, j) / s.invariants[i];
      } else if (ux(i, j) != 0) {
        fail(ErrorKind::NonIntegralSolve, "vector does not lie in the span of the lattice");
      }
    }
  }
  return s.v * y;
}

/// True when every column of x lies in the lattice spanned by gens.
inline bool contains(const IntMatrix& gens, const IntMatrix& x) {
  const IntMatrix b = basis(gens);
  if (b.cols() == 0) return x.is_zero();
  try {
    (void)coordinates(b, x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lattice

}  // namespace propeq
