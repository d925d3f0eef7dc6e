#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "propeq/linalg.hpp"
#include "propeq/smith.hpp"

namespace propeq {

/// A finitely generated abelian group (or, over Q, a finite-dimensional vector
/// space) in Smith normal form: Z/d1 + ... + Z/dk + Z^free_rank with d1 | d2 | ...
/// The canonical generators are the torsion generators followed by the free ones.
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup{rank, {}}; }

  std::size_t generator_count() const { return torsion.size() + free_rank; }
  bool is_zero() const { return generator_count() == 0; }

  /// Order of each canonical generator; 0 marks a free generator.
  std::vector<Integer> orders() const {
    std::vector<Integer> o(torsion.begin(), torsion.end());
    o.resize(generator_count(), Integer(0));
    return o;
  }

  void validate() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) fail(ErrorKind::InvalidArgument, "invariant factor below 2");
      if (i > 0 && torsion[i] % torsion[i - 1] != 0)
        fail(ErrorKind::InvalidArgument, "invariant factors do not form a divisibility chain");
    }
  }

  bool operator==(const FGAbelianGroup&) const = default;

  /// "Z^3 + Z/2", "Q^2", "0".
  std::string str(const std::string& ring = "Z") const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& d : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + d.str();
    }
    if (free_rank) {
      if (!s.empty()) s += " + ";
      s += ring;
      if (free_rank > 1) s += "^" + std::to_string(free_rank);
    }
    return s;
  }
};

namespace abelian {

inline IntMatrix relation_matrix(const std::vector<Integer>& orders) {
  std::size_t r = 0;
  for (const auto& o : orders)
    if (o != 0) ++r;
  IntMatrix d(orders.size(), r);
  std::size_t k = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) d(i, k++) = orders[i];
  return d;
}

/// Brings every entry of a row with finite order d into [0, d).
inline void reduce(const std::vector<Integer>& target_orders, IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer& d = target_orders[i];
    if (d == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer x = m(i, j) % d;
      if (x < 0) x += d;
      m(i, j) = x;
    }
  }
}

/// A matrix defines a homomorphism iff every source relation lands in the
/// target relations.
inline bool is_well_defined(const std::vector<Integer>& source_orders, const std::vector<Integer>& target_orders,
                            const IntMatrix& m) {
  if (m.rows() != target_orders.size() || m.cols() != source_orders.size()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (source_orders[j] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Integer image = source_orders[j] * m(i, j);
      if (target_orders[i] == 0) {
        if (image != 0) return false;
      } else if (image % target_orders[i] != 0) {
        return false;
      }
    }
  }
  return true;
}

inline bool maps_equal(const std::vector<Integer>& target_orders, IntMatrix a, IntMatrix b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  reduce(target_orders, a);
  reduce(target_orders, b);
  return a == b;
}

/// Z-span(z_basis) / Z-span(boundary_gens), where the second lattice lies in the first.
inline FGAbelianGroup subquotient(const IntMatrix& z_basis, const IntMatrix& boundary_gens) {
  if (z_basis.cols() == 0) return {};
  const IntMatrix coords = lattice::coordinates(z_basis, boundary_gens);
  const auto s = smith_normal_form(coords);
  FGAbelianGroup g;
  g.free_rank = z_basis.cols() - s.rank;
  for (const auto& d : s.invariants)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

/// The abelian group with the given generator orders, in Smith normal form.
inline FGAbelianGroup classify(const std::vector<Integer>& orders) {
  return subquotient(IntMatrix::identity(orders.size()), relation_matrix(orders));
}

/// Is m : source -> target onto?
inline bool is_surjective(const std::vector<Integer>& target_orders, const IntMatrix& m) {
  const IntMatrix gens = hconcat(m, relation_matrix(target_orders));
  return subquotient(IntMatrix::identity(target_orders.size()), gens).is_zero();
}

}  // namespace abelian

/// Cochain complex C^0 -> C^1 -> ... with C^n presented by generator orders
/// (always free over Q). differentials[n] maps C^n to C^{n+1}.
template <class Scalar>
struct CochainComplex {
  std::vector<std::vector<Integer>> orders;
  std::vector<Matrix<Scalar>> differentials;

  std::size_t length() const { return orders.size(); }
  std::size_t dimension(std::size_t n) const { return orders[n].size(); }
};

using IntegerCochainComplex = CochainComplex<Integer>;
using RationalCochainComplex = CochainComplex<Rational>;

template <class Scalar>
void check_complex(const CochainComplex<Scalar>& c) {
  if (c.differentials.size() + 1 != c.length() && !(c.length() == 0 && c.differentials.empty()))
    fail(ErrorKind::NotAComplex, "differential count does not match degree count");
  for (std::size_t n = 0; n < c.differentials.size(); ++n) {
    const auto& d = c.differentials[n];
    if (d.cols() != c.dimension(n) || d.rows() != c.dimension(n + 1))
      fail(ErrorKind::NotAComplex, "differential d^" + std::to_string(n) + " has the wrong shape");
    if constexpr (std::is_same_v<Scalar, Integer>) {
      if (!abelian::is_well_defined(c.orders[n], c.orders[n + 1], d))
        fail(ErrorKind::NotAComplex, "d^" + std::to_string(n) + " is not a homomorphism");
    }
  }
  for (std::size_t n = 0; n + 1 < c.differentials.size(); ++n) {
    const auto dd = c.differentials[n + 1] * c.differentials[n];
    bool zero = true;
    if constexpr (std::is_same_v<Scalar, Integer>)
      zero = abelian::maps_equal(c.orders[n + 2], dd, IntMatrix(dd.rows(), dd.cols()));
    else
      zero = dd.is_zero();
    if (!zero) fail(ErrorKind::NotAComplex, "d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) + " != 0");
  }
}

/// H^n of the complex for every degree, computed by exact Smith normal form.
inline std::vector<FGAbelianGroup> cohomology(const IntegerCochainComplex& c) {
  check_complex(c);
  std::vector<FGAbelianGroup> out;
  for (std::size_t n = 0; n < c.length(); ++n) {
    const std::size_t m = c.dimension(n);
    IntMatrix z;
    if (n < c.differentials.size()) {
      const IntMatrix rel = abelian::relation_matrix(c.orders[n + 1]);
      const IntMatrix joint = hconcat(c.differentials[n], -1 * rel);
      const IntMatrix k = lattice::kernel_basis(joint);
      z = lattice::basis(k.block(0, 0, m, k.cols()));
    } else {
      z = IntMatrix::identity(m);
    }
    IntMatrix b = abelian::relation_matrix(c.orders[n]);
    if (n > 0) b = hconcat(c.differentials[n - 1], b);
    out.push_back(abelian::subquotient(z, b));
  }
  return out;
}

inline std::vector<FGAbelianGroup> cohomology(const RationalCochainComplex& c) {
  check_complex(c);
  std::vector<FGAbelianGroup> out;
  for (std::size_t n = 0; n < c.length(); ++n) {
    std::size_t dim = c.dimension(n);
    if (n < c.differentials.size()) dim -= linalg::rank(c.differentials[n]);
    if (n > 0) dim -= linalg::rank(c.differentials[n - 1]);
    out.push_back(FGAbelianGroup::free(dim));
  }
  return out;
}

}  // namespace propeq
