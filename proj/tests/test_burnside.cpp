#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace propeq;

namespace {

std::vector<Group> finite_groups() {
  return {groups::cyclic(2), groups::cyclic(3), groups::cyclic(4), groups::klein_four(), groups::symmetric3(),
          groups::dihedral8(), groups::elementary_abelian2(3)};
}

// lib class index -> oracle class index
std::vector<std::size_t> class_map(const BurnsideRing& r, const std::vector<std::vector<oracle::ElemSet>>& classes) {
  std::vector<std::size_t> m;
  for (const auto& h : r.classes()) m.push_back(oracle::class_index(classes, oracle::as_set(h)));
  return m;
}

}  // namespace

TEST(Burnside, MarksMatchFixedPointCount) {
  for (const auto& g : finite_groups()) {
    const auto r = BurnsideRing::of(g);
    const auto x = oracle::as_set(whole_group(g));
    EXPECT_EQ(r->rank(), oracle::subgroup_classes(g, x).size());
    for (std::size_t i = 0; i < r->rank(); ++i)
      for (std::size_t j = 0; j < r->rank(); ++j)
        EXPECT_EQ(r->marks()(i, j),
                  oracle::fixed_points(g, x, oracle::as_set(r->classes()[i]), oracle::as_set(r->classes()[j])))
            << g.name() << " " << i << "," << j;
  }
}

TEST(Burnside, S3TableOfMarks) {
  const auto r = BurnsideRing::of(groups::symmetric3());
  EXPECT_EQ(r->marks(), IntMatrix({{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}}));
}

TEST(Burnside, ProductsMatchOrbitDecomposition) {
  for (const auto& g : finite_groups()) {
    const auto r = BurnsideRing::of(g);
    const auto x = oracle::as_set(whole_group(g));
    const auto classes = oracle::subgroup_classes(g, x);
    const auto cm = class_map(*r, classes);
    for (std::size_t i = 0; i < r->rank(); ++i)
      for (std::size_t j = 0; j < r->rank(); ++j) {
        const auto p = multiply(BurnsideElement::basis(r, i), BurnsideElement::basis(r, j));
        const auto o = oracle::orbit_product(g, x, oracle::as_set(r->classes()[i]), oracle::as_set(r->classes()[j]),
                                             classes);
        for (std::size_t k = 0; k < r->rank(); ++k) EXPECT_EQ(p.coeffs[k], o[cm[k]]) << g.name();
      }
  }
}

TEST(Burnside, RingAxioms) {
  const auto r = BurnsideRing::of(groups::dihedral8());
  const auto one = BurnsideElement::one(r);
  for (std::size_t i = 0; i < r->rank(); ++i) {
    const auto a = BurnsideElement::basis(r, i);
    EXPECT_EQ(multiply(a, one), a);
    for (std::size_t j = 0; j < r->rank(); ++j) {
      const auto b = BurnsideElement::basis(r, j);
      EXPECT_EQ(multiply(a, b), multiply(b, a));
      for (std::size_t k = 0; k < r->rank(); ++k) {
        const auto c = BurnsideElement::basis(r, k);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
      }
    }
  }
}

TEST(Burnside, RestrictionCountsFixedPoints) {
  // marks of res_K [X/H] at L <= K are |(X/H)^L|
  for (const auto& g : {groups::symmetric3(), groups::dihedral8()}) {
    const auto r = BurnsideRing::of(g);
    const auto x = oracle::as_set(whole_group(g));
    for (const auto& k : all_subgroups(g, whole_group(g))) {
      for (std::size_t i = 0; i < r->rank(); ++i) {
        const auto res = restriction(BurnsideElement::basis(r, i), k);
        const auto marks = res.ring->marks_of(res.coeffs);
        for (std::size_t j = 0; j < res.ring->rank(); ++j)
          EXPECT_EQ(marks[j], oracle::fixed_points(g, x, oracle::as_set(r->classes()[i]),
                                                   oracle::as_set(res.ring->classes()[j])));
      }
    }
  }
}

TEST(Burnside, InductionAndConjugation) {
  const Group g = groups::dihedral8();
  const auto r = BurnsideRing::of(g);
  const auto x = oracle::as_set(whole_group(g));
  for (const auto& k : all_subgroups(g, whole_group(g))) {
    const auto rk = std::make_shared<const BurnsideRing>(g, k);
    for (std::size_t i = 0; i < rk->rank(); ++i) {
      const auto ind = induction(BurnsideElement::basis(rk, i), r);
      const auto marks = r->marks_of(ind.coeffs);
      for (std::size_t j = 0; j < r->rank(); ++j)
        EXPECT_EQ(marks[j], oracle::fixed_points(g, x, oracle::as_set(rk->classes()[i]),
                                                 oracle::as_set(r->classes()[j])));
    }
    for (const auto& y : g.elements()) {
      const auto c = conjugation(BurnsideElement::one(rk), y);
      EXPECT_EQ(c.ring->group(), conjugate_subgroup(g, k, y));
      EXPECT_EQ(c, BurnsideElement::one(c.ring));
    }
  }
}

TEST(Burnside, RationalIdempotents) {
  for (const auto& g : {groups::symmetric3(), groups::dihedral8(), groups::cyclic(4)}) {
    const auto r = BurnsideRing::of(g);
    const auto e = rational_idempotents(*r);
    const auto m = matrix_cast<Rational>(r->marks());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto marks = m.transpose().apply(e[i]);
      for (std::size_t j = 0; j < marks.size(); ++j) EXPECT_EQ(marks[j], Rational(i == j ? 1 : 0));
    }
  }
}

TEST(Burnside, ForeignSubgroupRejected) {
  const Group g = groups::symmetric3();
  const auto r = BurnsideRing::of(g);
  const auto h = closure(g, std::vector<Element>{Element({1, 0, 2})}, 10);
  const auto rh = std::make_shared<const BurnsideRing>(g, h);
  try {
    rh->class_of(closure(g, std::vector<Element>{Element({1, 2, 0})}, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubgroup);
  }
  EXPECT_THROW(BurnsideRing::of(groups::integers()), Error);
}
