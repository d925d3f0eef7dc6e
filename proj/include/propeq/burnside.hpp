#pragma once

#include <map>
#include <memory>
#include <vector>

#include "propeq/linalg.hpp"
#include "propeq/subgroup.hpp"

namespace propeq {

/// The Burnside ring A(X) of a finite subgroup X of an ambient group, with
/// basis the transitive X-sets [X/H_i] over the subgroup classes of X.
///
/// marks(i, j) = |(X/H_i)^{H_j}|. With classes sorted by order the matrix is
/// lower triangular: an H_j-fixed coset of H_i forces H_j to be subconjugate
/// to H_i.
class BurnsideRing {
 public:
  BurnsideRing(Group ambient, FiniteSubgroup group) : ambient_(std::move(ambient)), group_(std::move(group)) {
    classes_ = subgroup_conjugacy_classes_in(ambient_, group_);
    for (std::size_t i = 0; i < classes_.size(); ++i)
      for (const auto& y : group_.elements()) class_index_.emplace(conjugate_subgroup(ambient_, classes_[i], y), i);
    const std::size_t c = classes_.size();
    marks_ = IntMatrix(c, c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::size_t count = 0;
        for (const auto& x : group_.elements())
          if (conjugate_subgroup_right(ambient_, classes_[j], x).is_subgroup_of(classes_[i])) ++count;
        marks_(i, j) = Integer(count / classes_[i].order());
      }
  }

  /// A(G) for a finite-kind group G.
  static std::shared_ptr<const BurnsideRing> of(const Group& g) {
    if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "Burnside ring needs a finite group");
    return std::make_shared<const BurnsideRing>(g, whole_group(g));
  }

  const Group& ambient() const { return ambient_; }
  const FiniteSubgroup& group() const { return group_; }
  const std::vector<FiniteSubgroup>& classes() const { return classes_; }
  const IntMatrix& marks() const { return marks_; }
  std::size_t rank() const { return classes_.size(); }

  /// Basis index of [X/L] for any subgroup L of X.
  std::size_t class_of(const FiniteSubgroup& l) const {
    auto it = class_index_.find(l);
    if (it == class_index_.end()) fail(ErrorKind::NotASubgroup, "subgroup " + l.str() + " is not contained in X");
    return it->second;
  }

  std::size_t unit_index() const { return rank() - 1; }

  /// Mark homomorphism: phi(a)_j = sum_i a_i marks(i, j).
  std::vector<Integer> marks_of(const std::vector<Integer>& coeffs) const {
    return marks_.transpose().apply(coeffs);
  }

  /// Inverse of the mark homomorphism over Q.
  std::vector<Rational> from_marks(const std::vector<Rational>& marks) const {
    auto sol = linalg::solve(matrix_cast<Rational>(marks_.transpose()), marks);
    if (!sol) fail(ErrorKind::NonIntegralSolve, "mark vector outside the image");
    return *sol;
  }

 private:
  Group ambient_;
  FiniteSubgroup group_;
  std::vector<FiniteSubgroup> classes_;
  std::map<FiniteSubgroup, std::size_t> class_index_;
  IntMatrix marks_;
};

using BurnsideRingPtr = std::shared_ptr<const BurnsideRing>;

struct BurnsideElement {
  BurnsideRingPtr ring;
  std::vector<Integer> coeffs;

  static BurnsideElement zero(BurnsideRingPtr r) {
    const auto n = r->rank();
    return {std::move(r), std::vector<Integer>(n, Integer(0))};
  }
  static BurnsideElement basis(BurnsideRingPtr r, std::size_t i) {
    auto e = zero(std::move(r));
    e.coeffs[i] = 1;
    return e;
  }
  /// [X/L]
  static BurnsideElement orbit(BurnsideRingPtr r, const FiniteSubgroup& l) {
    const auto i = r->class_of(l);
    return basis(std::move(r), i);
  }
  static BurnsideElement one(BurnsideRingPtr r) {
    const auto i = r->unit_index();
    return basis(std::move(r), i);
  }

  bool operator==(const BurnsideElement& o) const { return ring == o.ring && coeffs == o.coeffs; }
};

inline BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring != b.ring) fail(ErrorKind::InvalidArgument, "Burnside elements over different rings");
  BurnsideElement c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

/// Product of X-sets, computed through the marks: multiply mark vectors
/// componentwise and solve back; the result must be integral.
inline BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring != b.ring) fail(ErrorKind::InvalidArgument, "Burnside elements over different rings");
  const auto ma = a.ring->marks_of(a.coeffs);
  const auto mb = a.ring->marks_of(b.coeffs);
  std::vector<Rational> prod(ma.size());
  for (std::size_t j = 0; j < ma.size(); ++j) prod[j] = Rational(ma[j] * mb[j]);
  const auto sol = a.ring->from_marks(prod);
  BurnsideElement c = BurnsideElement::zero(a.ring);
  for (std::size_t i = 0; i < sol.size(); ++i) {
    if (!is_integral(sol[i])) fail(ErrorKind::NonIntegralSolve, "product of X-sets solved to a non-integer");
    c.coeffs[i] = to_integer(sol[i]);
  }
  return c;
}

/// Matrix of res^X_K : A(X) -> A(K): [X/H] -> sum over K g H of [K / (K n gHg^-1)].
inline IntMatrix restriction_matrix(const BurnsideRing& from, const BurnsideRing& to) {
  if (!to.group().is_subgroup_of(from.group())) fail(ErrorKind::NotASubgroup, "restriction target is not a subgroup");
  const Group& g = from.ambient();
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t i = 0; i < from.rank(); ++i) {
    const auto& h = from.classes()[i];
    for (const auto& x : double_cosets_in(g, from.group(), to.group(), h))
      m(to.class_of(intersect(to.group(), conjugate_subgroup(g, h, x))), i) += 1;
  }
  return m;
}

/// Matrix of ind_K^X : A(K) -> A(X): [K/L] -> [X/L].
inline IntMatrix induction_matrix(const BurnsideRing& from, const BurnsideRing& to) {
  if (!from.group().is_subgroup_of(to.group())) fail(ErrorKind::NotASubgroup, "induction source is not a subgroup");
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t i = 0; i < from.rank(); ++i) m(to.class_of(from.classes()[i]), i) = 1;
  return m;
}

/// Matrix of c_g : A(H) -> A(gHg^-1): [H/L] -> [gHg^-1 / gLg^-1].
inline IntMatrix conjugation_matrix(const BurnsideRing& from, const BurnsideRing& to, const Element& g) {
  const Group& amb = from.ambient();
  if (conjugate_subgroup(amb, from.group(), g) != to.group())
    fail(ErrorKind::InvalidArgument, "conjugation does not carry the source onto the target");
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t i = 0; i < from.rank(); ++i) m(to.class_of(conjugate_subgroup(amb, from.classes()[i], g)), i) = 1;
  return m;
}

inline BurnsideElement restriction(const BurnsideElement& a, const FiniteSubgroup& k) {
  if (!k.is_subgroup_of(a.ring->group())) fail(ErrorKind::NotASubgroup, "restriction to a non-subgroup");
  auto target = std::make_shared<const BurnsideRing>(a.ring->ambient(), k);
  return {target, restriction_matrix(*a.ring, *target).apply(a.coeffs)};
}

inline BurnsideElement induction(const BurnsideElement& a, const BurnsideRingPtr& target) {
  return {target, induction_matrix(*a.ring, *target).apply(a.coeffs)};
}

inline BurnsideElement conjugation(const BurnsideElement& a, const Element& g) {
  const Group& amb = a.ring->ambient();
  auto target = std::make_shared<const BurnsideRing>(amb, conjugate_subgroup(amb, a.ring->group(), g));
  return {target, conjugation_matrix(*a.ring, *target, g).apply(a.coeffs)};
}

/// e_H for every class: the rational element whose mark vector is the
/// indicator of that class. Returned in class order.
inline std::vector<std::vector<Rational>> rational_idempotents(const BurnsideRing& ring) {
  auto inv = linalg::inverse(matrix_cast<Rational>(ring.marks()));
  if (!inv) fail(ErrorKind::NonIntegralSolve, "table of marks is singular");
  std::vector<std::vector<Rational>> out;
  for (std::size_t j = 0; j < ring.rank(); ++j) out.push_back(inv->row(j));
  return out;
}

}  // namespace propeq
