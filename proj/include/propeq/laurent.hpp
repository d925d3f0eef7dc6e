#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propeq/mackey_functor.hpp"
#include "propeq/smith.hpp"

namespace propeq {

/// Element of Q[t, t^-1]: sparse map exponent -> nonzero coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int c) : LaurentPolynomial(Rational(c)) {}
  LaurentPolynomial(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  static LaurentPolynomial monomial(const Rational& c, std::int64_t e) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static LaurentPolynomial t() { return monomial(1, 1); }

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t min_exp() const { return terms_.begin()->first; }
  std::int64_t max_exp() const { return terms_.rbegin()->first; }
  /// max - min exponent: the Q-dimension of R/(p) for p != 0.
  std::int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
  const Rational& leading() const { return terms_.rbegin()->second; }
  Rational coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_unit() const { return terms_.size() == 1; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  /// Multiplication by t^k.
  LaurentPolynomial shifted(std::int64_t k) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      const bool one = a == 1;
      if (!one || e == 0) s += to_string(a);
      if (e != 0) {
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void add_term(std::int64_t e, const Rational& c) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  std::map<std::int64_t, Rational> terms_;
};

inline std::string to_string(const LaurentPolynomial& p) { return p.str(); }

using LaurentMatrix = Matrix<LaurentPolynomial>;

/// Euclidean structure on Q[t, t^-1]: size is the exponent span, division is
/// polynomial division after clearing powers of t, and the canonical associate
/// is monic with lowest exponent 0.
template <>
struct EuclideanTraits<LaurentPolynomial> {
  static std::int64_t size(const LaurentPolynomial& a) { return a.span(); }

  static std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& a,
                                                                const LaurentPolynomial& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero Laurent polynomial");
    if (a.is_zero()) return {LaurentPolynomial(), LaurentPolynomial()};
    const auto la = a.min_exp(), lb = b.min_exp();
    LaurentPolynomial r = a.shifted(-la);
    const LaurentPolynomial d = b.shifted(-lb);
    const auto dd = d.max_exp();
    LaurentPolynomial q;
    while (!r.is_zero() && r.max_exp() >= dd) {
      const auto m = LaurentPolynomial::monomial(r.leading() / d.leading(), r.max_exp() - dd);
      q += m;
      r -= m * d;
    }
    return {q.shifted(la - lb), r.shifted(la)};
  }

  static LaurentPolynomial unit_normalizer(const LaurentPolynomial& a) {
    if (a.is_zero()) return LaurentPolynomial(1);
    return LaurentPolynomial::monomial(Rational(1) / a.leading(), -a.min_exp());
  }
  static LaurentPolynomial unit_inverse(const LaurentPolynomial& u) {
    const auto& [e, c] = *u.terms().begin();
    return LaurentPolynomial::monomial(Rational(1) / c, -e);
  }
};

inline LaurentPolynomial normalized(const LaurentPolynomial& a) {
  return a * EuclideanTraits<LaurentPolynomial>::unit_normalizer(a);
}

inline LaurentPolynomial gcd(LaurentPolynomial a, LaurentPolynomial b) {
  while (!b.is_zero()) {
    auto r = EuclideanTraits<LaurentPolynomial>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : normalized(a);
}

/// A finitely presented Q[t, t^-1]-module: generators are the rows of the
/// presentation matrix, relations its columns.
struct LaurentModule {
  LaurentMatrix presentation;

  std::size_t generators() const { return presentation.rows(); }

  /// Q^d with t acting by the invertible matrix a, presented by tI - a.
  static LaurentModule from_endomorphism(const RatMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::InvalidArgument, "endomorphism must be square");
    if (!linalg::inverse(a)) fail(ErrorKind::InvalidArgument, "t must act invertibly");
    LaurentMatrix p(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = LaurentPolynomial(-a(i, j));
    for (std::size_t i = 0; i < a.rows(); ++i) p(i, i) += LaurentPolynomial::t();
    return {p};
  }
  static LaurentModule free(std::size_t n) { return {LaurentMatrix(n, 0)}; }
};

/// M = R^free + sum R/(d_i) with d_i non-units in divisibility order.
struct CyclicDecomposition {
  std::size_t free_rank = 0;
  std::vector<LaurentPolynomial> torsion;

  /// Q-dimension, or nullopt when infinite.
  std::optional<std::size_t> dimension() const {
    if (free_rank) return std::nullopt;
    std::size_t d = 0;
    for (const auto& p : torsion) d += static_cast<std::size_t>(p.span());
    return d;
  }
};

inline CyclicDecomposition decompose(const LaurentModule& m) {
  const auto s = smith_normal_form<LaurentPolynomial>(m.presentation);
  // certificate that the resolution 0 -> R^rank -> R^gens -> M -> 0 is exact
  const auto n = m.presentation.rows(), c = m.presentation.cols();
  if (s.u * m.presentation * s.v != s.diagonal || s.u * s.u_inv != LaurentMatrix::identity(n) ||
      s.v * s.v_inv != LaurentMatrix::identity(c))
    fail(ErrorKind::ResolutionFailure, "Smith normal form certificate failed");
  CyclicDecomposition d;
  d.free_rank = n - s.rank;
  for (const auto& x : s.invariants)
    if (!x.is_unit()) d.torsion.push_back(x);
  return d;
}

/// Ext^0 = Hom and Ext^1 over Q[t, t^-1] (global dimension 1, so Ext^k = 0
/// for k >= 2), each as a cyclic decomposition plus its Q-dimension.
struct ExtResult {
  CyclicDecomposition ext0;
  CyclicDecomposition ext1;
};

inline ExtResult ext_laurent(const LaurentModule& m, const LaurentModule& n) {
  const auto dm = decompose(m), dn = decompose(n);
  ExtResult r;
  auto push = [](CyclicDecomposition& into, const LaurentPolynomial& p) {
    if (!p.is_unit()) into.torsion.push_back(p);
  };
  for (const auto& a : dm.torsion) {
    for (const auto& b : dn.torsion) {
      const auto g = gcd(a, b);
      push(r.ext0, g);  // Hom(R/a, R/b) = R/gcd
      push(r.ext1, g);  // Ext(R/a, R/b) = R/gcd
    }
    for (std::size_t k = 0; k < dn.free_rank; ++k) push(r.ext1, a);  // Ext(R/a, R) = R/a
  }
  for (std::size_t k = 0; k < dm.free_rank; ++k) {
    for (const auto& b : dn.torsion) push(r.ext0, b);  // Hom(R, N) = N
    r.ext0.free_rank += dn.free_rank;
  }
  return r;
}

/// A rational Z-Mackey functor on the family {e} is the Q[t, t^-1]-module
/// M(e) with t acting by conjugation with the generator.
inline LaurentModule mackey_to_laurent(const RationalMackeyFunctor& m) {
  const Group& g = m.ambient();
  if (g.kind() != GroupKind::FreeAbelian || g.degree() != 1)
    fail(ErrorKind::WrongAmbient, "mackey_to_laurent needs the ambient group Z");
  if (m.family().reps().size() != 1 || m.family().reps()[0].order() != 1)
    fail(ErrorKind::WrongAmbient, "mackey_to_laurent needs the family {e}");
  return LaurentModule::from_endomorphism(m.act(0, g.generators()[0]));
}

}  // namespace propeq
