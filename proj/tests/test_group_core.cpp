#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace propeq;

namespace {

std::vector<Group> finite_groups() {
  return {groups::cyclic(2), groups::cyclic(3), groups::cyclic(4), groups::klein_four(), groups::symmetric3(),
          groups::dihedral8(), groups::elementary_abelian2(3)};
}

std::set<oracle::ElemSet> as_sets(const std::vector<FiniteSubgroup>& hs) {
  std::set<oracle::ElemSet> out;
  for (const auto& h : hs) out.insert(oracle::as_set(h));
  return out;
}

}  // namespace

TEST(GroupCore, Orders) {
  EXPECT_EQ(groups::cyclic(5).order(), 5u);
  EXPECT_EQ(groups::symmetric3().order(), 6u);
  EXPECT_EQ(groups::dihedral8().order(), 8u);
  EXPECT_EQ(groups::klein_four().order(), 4u);
  EXPECT_EQ(groups::elementary_abelian2(3).order(), 8u);
}

TEST(GroupCore, SubgroupsMatchBruteForce) {
  for (const auto& g : finite_groups()) {
    const auto lib = as_sets(all_subgroups(g, whole_group(g)));
    const auto brute = oracle::subgroups(g);
    EXPECT_EQ(lib, std::set<oracle::ElemSet>(brute.begin(), brute.end())) << g.name();
  }
}

TEST(GroupCore, KnownSubgroupCounts) {
  EXPECT_EQ(all_subgroups(groups::symmetric3(), whole_group(groups::symmetric3())).size(), 6u);
  EXPECT_EQ(subgroup_conjugacy_classes(groups::symmetric3()).size(), 4u);
  EXPECT_EQ(all_subgroups(groups::dihedral8(), whole_group(groups::dihedral8())).size(), 10u);
  EXPECT_EQ(subgroup_conjugacy_classes(groups::dihedral8()).size(), 8u);
  EXPECT_EQ(subgroup_conjugacy_classes(groups::klein_four()).size(), 5u);
}

TEST(GroupCore, ConjugacyClassesMatchBruteForce) {
  for (const auto& g : finite_groups()) {
    const auto reps = subgroup_conjugacy_classes(g);
    const auto classes = oracle::subgroup_classes(g, oracle::as_set(whole_group(g)));
    ASSERT_EQ(reps.size(), classes.size()) << g.name();
    std::set<std::size_t> hit;
    for (const auto& r : reps) hit.insert(oracle::class_index(classes, oracle::as_set(r)));
    EXPECT_EQ(hit.size(), classes.size());
    for (std::size_t i = 1; i < reps.size(); ++i) EXPECT_LE(reps[i - 1].order(), reps[i].order());
  }
}

TEST(GroupCore, NormalizerAndWeylGroup) {
  for (const auto& g : finite_groups())
    for (const auto& h : all_subgroups(g, whole_group(g))) {
      oracle::ElemSet n;
      for (const auto& x : g.elements())
        if (oracle::conj(g, x, oracle::as_set(h)) == oracle::as_set(h)) n.insert(x);
      EXPECT_EQ(oracle::as_set(normalizer_in(g, whole_group(g), h)), n);
      const auto w = weyl_group(h, g);
      EXPECT_EQ(w.transversal.size() * h.order(), n.size());
    }
}

TEST(GroupCore, DoubleCosetsMatchBruteForce) {
  for (const auto& g : {groups::symmetric3(), groups::dihedral8()}) {
    const auto subs = all_subgroups(g, whole_group(g));
    for (const auto& k : subs)
      for (const auto& h : subs) {
        const auto lib = double_cosets(k, g, h);
        const auto brute = oracle::double_cosets(g, oracle::as_set(whole_group(g)), oracle::as_set(k), oracle::as_set(h));
        EXPECT_EQ(lib.size(), brute.size());
        std::set<oracle::ElemSet> covered;
        for (const auto& x : lib) {
          const auto d = double_coset(g, k, x, h);
          covered.insert(oracle::ElemSet(d.begin(), d.end()));
        }
        EXPECT_EQ(covered, std::set<oracle::ElemSet>(brute.begin(), brute.end()));
      }
  }
}

TEST(GroupCore, ConjugationConventions) {
  const Group g = groups::symmetric3();
  const Element t({1, 0, 2}), c({1, 2, 0});
  const auto h = closure(g, std::vector<Element>{t}, 100);
  const auto left = conjugate_subgroup(g, h, c);
  const auto right = conjugate_subgroup_right(g, h, c);
  EXPECT_TRUE(left.contains(g.conjugate(c, t)));
  EXPECT_TRUE(right.contains(g.conjugate(g.inverse(c), t)));
  EXPECT_NE(left, right);
}

TEST(GroupCore, TableGroup) {
  const Group c3 = Group::table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(c3.order(), 3u);
  EXPECT_EQ(all_subgroups(c3, whole_group(c3)).size(), 2u);
  EXPECT_THROW(Group::table({{0, 1}, {0, 1}}), Error);
}

TEST(GroupCore, InfiniteGroups) {
  const Group z = groups::integers();
  EXPECT_FALSE(z.is_finite());
  EXPECT_EQ(z.multiply(Element({3}), Element({-5})), Element({-2}));
  try {
    closure(z, std::vector<Element>{Element({1})}, 50);
    FAIL() << "closure of a translation must exceed the cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }

  const Group d = groups::infinite_dihedral();
  const Element r({1, 0}), s({0, 1});
  EXPECT_EQ(d.conjugate(s, r), d.inverse(r));
  EXPECT_EQ(d.multiply(s, s), d.identity());
  EXPECT_EQ(closure(d, std::vector<Element>{d.multiply(r, s)}, 50).order(), 2u);
  EXPECT_FALSE(d.contains(Element({0, 2})));
  try {
    d.require(Element({0, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ForeignElement);
  }
}
