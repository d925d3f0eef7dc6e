#include <gtest/gtest.h>

#include "propeq/io.hpp"
#include "support/oracles.hpp"

using namespace propeq;

namespace {

RatMatrix random_endomorphism(std::mt19937& rng, std::size_t n) {
  // eigenvalues in {1, -1, 2} so the modules share factors often
  std::uniform_int_distribution<int> pick(0, 2);
  RatMatrix d(n, n);
  const Rational eig[] = {1, -1, 2};
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = eig[pick(rng)];
    if (i + 1 < n && pick(rng) == 0) d(i, i + 1) = 1;
  }
  const auto p = oracle::random_invertible(rng, n);
  return p * d * *linalg::inverse(p);
}

LaurentModule load_module(const std::string& file) {
  return io::parse_laurent_module(io::load(std::string(PROPEQ_DATA_DIR) + "/" + file).root());
}

}  // namespace

TEST(Ext, TrivialModuleSelfExt) {
  const auto q1 = load_module("q_t1.json");
  const auto r = ext_laurent(q1, q1);
  EXPECT_EQ(r.ext0.dimension(), std::optional<std::size_t>(1));
  EXPECT_EQ(r.ext1.dimension(), std::optional<std::size_t>(1));
  ASSERT_EQ(r.ext1.torsion.size(), 1u);
  EXPECT_EQ(r.ext1.torsion[0].str(), "t - 1");
}

TEST(Ext, DocumentExamples) {
  const auto q1 = load_module("q_t1.json"), qm = load_module("q_tm1.json");
  const auto free = load_module("laurent_free.json"), jordan = load_module("laurent_jordan.json");
  auto dims = [](const ExtResult& r) { return std::make_pair(r.ext0.dimension(), r.ext1.dimension()); };
  using P = std::pair<std::optional<std::size_t>, std::optional<std::size_t>>;
  EXPECT_EQ(dims(ext_laurent(q1, qm)), P(0, 0));
  EXPECT_EQ(dims(ext_laurent(free, jordan)), P(2, 0));
  EXPECT_EQ(dims(ext_laurent(jordan, jordan)), P(2, 2));
  EXPECT_EQ(dims(ext_laurent(q1, free)), P(0, 1));
  const auto ff = ext_laurent(free, free);
  EXPECT_EQ(ff.ext0.free_rank, 1u);
  EXPECT_EQ(ff.ext0.dimension(), std::nullopt);
  EXPECT_EQ(ff.ext1.dimension(), std::optional<std::size_t>(0));
}

TEST(Ext, MatchesSylvesterDimension) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_endomorphism(rng, 1 + rng() % 3);
    const auto b = random_endomorphism(rng, 1 + rng() % 3);
    const auto r = ext_laurent(LaurentModule::from_endomorphism(a), LaurentModule::from_endomorphism(b));
    const auto expected = oracle::sylvester_dim(a, b);
    EXPECT_EQ(r.ext0.dimension(), std::optional<std::size_t>(expected));
    // finite-dimensional modules have Euler characteristic 0 against each other
    EXPECT_EQ(r.ext1.dimension(), std::optional<std::size_t>(expected));
  }
}

TEST(Ext, AdditiveInEachVariable) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_endomorphism(rng, 2), b = random_endomorphism(rng, 1), c = random_endomorphism(rng, 2);
    const auto ma = LaurentModule::from_endomorphism(a), mb = LaurentModule::from_endomorphism(b);
    const auto mc = LaurentModule::from_endomorphism(c);
    const auto sum = LaurentModule::from_endomorphism(direct_sum<Rational>({a, b}));
    const auto lhs = ext_laurent(sum, mc), r1 = ext_laurent(ma, mc), r2 = ext_laurent(mb, mc);
    EXPECT_EQ(*lhs.ext0.dimension(), *r1.ext0.dimension() + *r2.ext0.dimension());
    EXPECT_EQ(*lhs.ext1.dimension(), *r1.ext1.dimension() + *r2.ext1.dimension());
    const auto rhs = ext_laurent(mc, sum), s1 = ext_laurent(mc, ma), s2 = ext_laurent(mc, mb);
    EXPECT_EQ(*rhs.ext1.dimension(), *s1.ext1.dimension() + *s2.ext1.dimension());
  }
}

TEST(Ext, SingularEndomorphismRejected) {
  EXPECT_THROW(LaurentModule::from_endomorphism(RatMatrix({{0}})), Error);
}

TEST(Ext, MackeyFunctorOverIntegers) {
  const auto doc = io::parse_text(R"({"version":1,"group":"Z","family":"trivial","scalar":"Q",
    "values":[{"free":2}],"res":[],"tr":[],
    "action":[{"rep":0,"element":[1],"matrix":[[1,1],[0,1]]}]})");
  const auto m = std::get<RationalMackeyFunctor>(io::parse_functor(doc.root()));
  const auto mod = mackey_to_laurent(m);
  const auto d = decompose(mod);
  ASSERT_EQ(d.torsion.size(), 1u);
  EXPECT_EQ(d.torsion[0].str(), "t^2 - 2t + 1");
  const auto r = ext_laurent(load_module("q_t1.json"), mod);
  EXPECT_EQ(r.ext0.dimension(), std::optional<std::size_t>(1));

  const auto s3 = rationalize(burnside_mackey(full_family(groups::symmetric3())));
  try {
    mackey_to_laurent(s3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongAmbient);
  }
}

TEST(Tau, BuiltinRoundTrip) {
  for (const auto& g : {groups::cyclic(2), groups::symmetric3(), groups::dihedral8()}) {
    const auto fam = full_family(g);
    for (const std::string name : {"burnside", "constant:Z"}) {
      const auto m = rationalize(builtin_functor(name, fam));
      const auto n = tau(m);
      EXPECT_TRUE(check_conj_functor(n).empty());
      const auto r = reconstruct(n);
      EXPECT_TRUE(check_axioms(r).ok());
      EXPECT_TRUE(oracle::natural_iso(m, r, reconstruct_tau_comparison(m))) << g.name() << " " << name;
      EXPECT_TRUE(oracle::equivariant_iso(tau(r), n, tau_reconstruct_comparison(n))) << g.name() << " " << name;
    }
  }
}

TEST(Tau, RandomRoundTrip) {
  std::mt19937 rng(2024);
  for (const auto& g : {groups::cyclic(2), groups::symmetric3()}) {
    const auto fam = full_family(g);
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = oracle::random_conj_functor(fam, rng);
      ASSERT_TRUE(check_conj_functor(n).empty());
      const auto r = reconstruct(n);
      ASSERT_TRUE(check_axioms(r).ok());
      EXPECT_TRUE(oracle::equivariant_iso(tau(r), n, tau_reconstruct_comparison(n)));
      std::vector<RatMatrix> p;
      for (std::size_t j = 0; j < fam->reps().size(); ++j) p.push_back(oracle::random_invertible(rng, r.dim(j)));
      const auto m = change_basis(r, p);
      EXPECT_TRUE(check_axioms(m).ok());
      EXPECT_TRUE(oracle::natural_iso(m, reconstruct(tau(m)), reconstruct_tau_comparison(m)));
      // M(G) is the sum of the Weyl-invariants of tau M
      std::size_t total = 0;
      for (std::size_t j = 0; j < fam->reps().size(); ++j) total += oracle::invariant_dim(n, j);
      EXPECT_EQ(r.dim(fam->reps().size() - 1), total);
    }
  }
}

TEST(Tau, WeylDecomposition) {
  const auto c2 = groups::cyclic(2);
  const auto b = weyl_decompose(rationalize(burnside_mackey(full_family(c2))));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].dimension, 1u);
  EXPECT_EQ(b[1].dimension, 1u);
  EXPECT_EQ(b[0].weyl.order(), 2u);
  const auto c = weyl_decompose(rationalize(constant_mackey(FGAbelianGroup::free(1), full_family(c2))));
  EXPECT_EQ(c[0].dimension, 1u);
  EXPECT_EQ(c[1].dimension, 0u);

  // tau of the rational Burnside functor is Q at every class with trivial Weyl action
  const auto d8 = weyl_decompose(rationalize(burnside_mackey(full_family(groups::dihedral8()))));
  for (const auto& comp : d8) {
    EXPECT_EQ(comp.dimension, 1u);
    for (const auto& a : comp.action) EXPECT_EQ(a, RatMatrix::identity(1));
  }
}

TEST(Tau, InfiniteAmbientRejected) {
  const auto doc = io::load(PROPEQ_DATA_DIR "/burnside_dinf.json");
  const auto m = rationalize(std::get<IntegerMackeyFunctor>(io::parse_functor(doc.root())));
  try {
    tau(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteAmbient);
  }
}
