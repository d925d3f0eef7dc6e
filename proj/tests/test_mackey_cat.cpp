#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace propeq;

namespace {

std::size_t brute_hom_rank(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k) {
  const auto x = oracle::as_set(whole_group(g));
  std::size_t r = 0;
  for (const auto& d : oracle::double_cosets(g, x, oracle::as_set(k), oracle::as_set(h))) {
    const Element& gam = *d.begin();
    oracle::ElemSet meet;
    const auto ch = oracle::conj(g, gam, oracle::as_set(h));
    for (const auto& y : oracle::as_set(k))
      if (ch.count(y)) meet.insert(y);
    r += oracle::subgroup_classes(g, meet).size();
  }
  return r;
}

void expect_compose_matches_oracle(const Group& g, const std::vector<FiniteSubgroup>& subs) {
  for (const auto& h : subs)
    for (const auto& k : subs)
      for (const auto& j : subs) {
        const auto b1 = hom_basis(g, h, k), b2 = hom_basis(g, k, j);
        for (const auto& beta : b1)
          for (const auto& alpha : b2) {
            const auto eb = as_element(g, beta), ea = as_element(g, alpha);
            ASSERT_EQ(compose(g, eb, ea), pullback_oracle(g, eb, ea))
                << g.name() << " " << h.str() << " -> " << k.str() << " -> " << j.str();
          }
      }
}

}  // namespace

TEST(MackeyCategory, ComposeMatchesPullbackSmallGroups) {
  for (const auto& g : {groups::cyclic(2), groups::cyclic(3), groups::klein_four(), groups::symmetric3()})
    expect_compose_matches_oracle(g, all_subgroups(g, whole_group(g)));
}

TEST(MackeyCategory, ComposeMatchesPullbackD8) {
  const Group g = groups::dihedral8();
  expect_compose_matches_oracle(g, all_subgroups(g, whole_group(g)));
}

TEST(MackeyCategory, HomBasisRankMatchesDoubleCosetCount) {
  for (const auto& g : {groups::cyclic(2), groups::klein_four(), groups::symmetric3(), groups::dihedral8()}) {
    const auto subs = all_subgroups(g, whole_group(g));
    for (const auto& h : subs)
      for (const auto& k : subs) {
        const auto basis = hom_basis(g, h, k);
        const auto expected = brute_hom_rank(g, h, k);
        EXPECT_EQ(basis.size(), expected) << g.name() << " " << h.str() << " " << k.str();
        EXPECT_EQ(hom_rank(g, h, k), expected);
        for (std::size_t a = 0; a < basis.size(); ++a)
          for (std::size_t b = 0; b < a; ++b) EXPECT_FALSE(span_equivalent(g, basis[a], basis[b]));
      }
  }
}

TEST(MackeyCategory, IdentityAndAssociativity) {
  const Group g = groups::symmetric3();
  const auto subs = subgroup_conjugacy_classes(g);
  for (const auto& h : subs)
    for (const auto& k : subs) {
      for (const auto& s : hom_basis(g, h, k)) {
        const auto e = as_element(g, s);
        EXPECT_EQ(compose(g, as_element(g, identity_span(g, h)), e), e);
        EXPECT_EQ(compose(g, e, as_element(g, identity_span(g, k))), e);
      }
      for (const auto& j : subs)
        for (const auto& l : subs)
          for (const auto& a : hom_basis(g, h, k))
            for (const auto& b : hom_basis(g, k, j))
              for (const auto& c : hom_basis(g, j, l)) {
                const auto ea = as_element(g, a), eb = as_element(g, b), ec = as_element(g, c);
                EXPECT_EQ(compose(g, compose(g, ea, eb), ec), compose(g, ea, compose(g, eb, ec)));
              }
    }
}

TEST(MackeyCategory, RestrictionAfterTransferIsDoubleCosetSum) {
  const Group g = groups::dihedral8();
  for (const auto& k : all_subgroups(g, whole_group(g)))
    for (const auto& h : all_subgroups(g, k))
      for (const auto& l : all_subgroups(g, k)) {
        const auto lhs = compose(g, as_element(g, transfer_span(g, k, h)), as_element(g, restriction_span(g, k, l)));
        std::vector<std::pair<TransitiveSpan, Integer>> terms;
        for (const auto& d : oracle::double_cosets(g, oracle::as_set(k), oracle::as_set(l), oracle::as_set(h))) {
          const Element& y = *d.begin();
          const auto m = intersect(l, conjugate_subgroup(g, h, y));
          terms.push_back({TransitiveSpan{h, l, m, y}, 1});
        }
        EXPECT_EQ(lhs, normalize(g, h, l, terms));
      }
}

TEST(MackeyCategory, CanonicalFormIsInvariant) {
  const Group g = groups::dihedral8();
  for (const auto& h : all_subgroups(g, whole_group(g)))
    for (const auto& k : all_subgroups(g, whole_group(g)))
      for (const auto& s : hom_basis(g, h, k))
        for (const auto& kk : k.elements())
          for (const auto& hh : h.elements()) {
            const TransitiveSpan t{h, k, conjugate_subgroup(g, s.mid, g.inverse(kk)),
                                   g.multiply(g.multiply(g.inverse(kk), s.gamma), hh)};
            EXPECT_TRUE(span_equivalent(g, s, t));
            EXPECT_EQ(canonicalize(g, t), s);
          }
}

TEST(MackeyCategory, InfiniteAmbientComposition) {
  const Group d = groups::infinite_dihedral();
  const Element s({0, 1}), rs({1, 1});
  const auto e = closure(d, std::vector<Element>{}, 10);
  const auto hs = closure(d, std::vector<Element>{s}, 10);
  const auto hrs = closure(d, std::vector<Element>{rs}, 10);
  // res^<s>_e o tr^<s>_e = sum over s-translates: 1 + c_s
  const auto lhs = compose(d, as_element(d, transfer_span(d, hs, e)), as_element(d, restriction_span(d, hs, e)));
  ASSERT_EQ(lhs.terms.size(), 2u);
  EXPECT_EQ(lhs, add(d, as_element(d, identity_span(d, e)), as_element(d, TransitiveSpan{e, e, e, s})));

  EXPECT_EQ(hom_rank(d, hs, hrs, std::vector<Element>{d.identity()}), 1u);
  EXPECT_EQ(hom_rank(d, hs, hs, std::vector<Element>{d.identity(), Element({1, 0})}), 3u);
  try {
    hom_rank(d, hs, hs, std::vector<Element>{d.identity(), s});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidArgument);
  }
  EXPECT_THROW(hom_rank(d, hs, hs), Error);
  EXPECT_THROW(pullback_oracle(d, lhs, lhs), Error);
}

TEST(MackeyCategory, InvalidSpansRejected) {
  const Group g = groups::symmetric3();
  const auto t = closure(g, std::vector<Element>{Element({1, 0, 2})}, 10);
  const auto c = closure(g, std::vector<Element>{Element({1, 2, 0})}, 10);
  EXPECT_THROW(as_element(g, TransitiveSpan{t, t, c, g.identity()}), Error);
  EXPECT_THROW(compose(g, as_element(g, identity_span(g, t)), as_element(g, identity_span(g, c))), Error);
}
