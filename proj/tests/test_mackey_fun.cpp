#include <gtest/gtest.h>

#include "propeq/io.hpp"
#include "support/oracles.hpp"

using namespace propeq;

namespace {

struct Case {
  std::string label;
  IntegerMackeyFunctor m;
};

std::vector<Case> builtin_cases() {
  std::vector<Case> out;
  for (const auto& g : {groups::cyclic(2), groups::cyclic(3), groups::klein_four(), groups::symmetric3(),
                        groups::dihedral8()}) {
    const auto all = full_family(g);
    for (const std::string name : {"burnside", "constant:Z", "constant:Z/2", "constant:Z/6"})
      out.push_back({g.name() + " " + name, builtin_functor(name, all)});
    out.push_back({g.name() + " repring", builtin_functor("repring", abelian_family(g))});
  }
  return out;
}

template <class Scalar>
std::size_t count_corruptions(const MackeyFunctor<Scalar>& m, std::size_t& undetected, const std::string& label) {
  std::size_t total = 0;
  const auto& fam = m.family();
  for (bool transfer : {false, true})
    for (std::size_t i = 0; i < fam.reps().size(); ++i)
      for (auto y : fam.subobjects(i)) {
        const auto& mat = transfer ? m.stored_tr(i, y) : m.stored_res(i, y);
        for (std::size_t r = 0; r < mat.rows(); ++r)
          for (std::size_t c = 0; c < mat.cols(); ++c) {
            const auto bad = m.perturbed(transfer, i, y, r, c, Scalar(1));
            const bool detected = !check_axioms(bad).ok();
            const bool valid = oracle::functorial(bad);
            EXPECT_EQ(detected, !valid) << label << (transfer ? " tr " : " res ") << i << "/" << y << " (" << r
                                        << "," << c << ")";
            if (!detected) ++undetected;
            ++total;
          }
      }
  return total;
}

}  // namespace

TEST(MackeyFunctor, BuiltinsSatisfyAxioms) {
  for (const auto& [label, m] : builtin_cases()) {
    const auto report = check_axioms(m);
    EXPECT_TRUE(report.ok()) << label << ": " << (report.ok() ? "" : report.violations.front().str());
    EXPECT_TRUE(oracle::functorial(m)) << label;
  }
}

TEST(MackeyFunctor, BuiltinValues) {
  const Group g = groups::symmetric3();
  const auto fam = full_family(g);
  const auto a = burnside_mackey(fam);
  // value at a rep R is A(R): ranks 1, 2, 2, 4 over e, C2, C3, S3
  std::vector<std::size_t> ranks;
  for (std::size_t j = 0; j < fam->reps().size(); ++j) ranks.push_back(a.value(j).free_rank);
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 2, 2, 4}));

  const auto e = fam->reps()[0], s3 = fam->reps()[3];
  const auto c = constant_mackey(FGAbelianGroup::free(1), fam);
  EXPECT_EQ(c.res(s3, e), IntMatrix({{1}}));
  EXPECT_EQ(c.tr(s3, e), IntMatrix({{6}}));

  const auto rr = builtin_functor("repring", abelian_family(groups::dihedral8()));
  for (std::size_t j = 0; j < rr.family().reps().size(); ++j)
    EXPECT_EQ(rr.value(j).free_rank, rr.family().reps()[j].order());
}

TEST(MackeyFunctor, CorruptionDetectionAgreesWithFunctoriality) {
  std::size_t total = 0, undetected = 0;
  for (const auto& g : {groups::cyclic(2), groups::symmetric3()}) {
    const auto all = full_family(g);
    for (const std::string name : {"burnside", "constant:Z", "constant:Z/2"}) {
      const auto m = builtin_functor(name, all);
      total += count_corruptions(m, undetected, g.name() + " " + name);
    }
    total += count_corruptions(rationalize(builtin_functor("burnside", all)), undetected, g.name() + " burnside/Q");
  }
  EXPECT_GT(total, 0u);
  EXPECT_LT(undetected, total);
}

TEST(MackeyFunctor, SomeSingleEntryCorruptionsAreMackeyFunctors) {
  // Burnside over C2: res^{C2}_e sends [C2/e] to 2 and [C2/C2] to 1; shifting the
  // second entry to 2 gives another functor on the Burnside category.
  const Group g = groups::cyclic(2);
  const auto fam = full_family(g);
  const auto a = burnside_mackey(fam);
  const auto e = fam->index_of(fam->reps()[0]);
  ASSERT_EQ(a.stored_res(1, e), IntMatrix({{2, 1}}));
  const auto bad = a.perturbed(false, 1, e, 0, 1, Integer(1));
  EXPECT_TRUE(oracle::functorial(bad));
  EXPECT_TRUE(check_axioms(bad).ok());
}

TEST(MackeyFunctor, DoubleCosetFormulaOnBuiltins) {
  for (const auto& g : {groups::symmetric3(), groups::dihedral8()}) {
    const auto all = full_family(g);
    std::vector<IntegerMackeyFunctor> ms{burnside_mackey(all), constant_mackey(FGAbelianGroup::free(1), all),
                                         builtin_functor("constant:Z/4", all)};
    const auto subs = all_subgroups(g, whole_group(g));
    for (const auto& m : ms)
      for (const auto& k : subs)
        for (const auto& h : all_subgroups(g, k))
          for (const auto& l : all_subgroups(g, k)) {
            const auto f = compose(g, as_element(g, transfer_span(g, k, h)), as_element(g, restriction_span(g, k, l)));
            const auto lk = m.family().locate(l).rep;
            IntMatrix rhs(m.dim(lk), m.dim(m.family().locate(h).rep));
            for (const auto& d : oracle::double_cosets(g, oracle::as_set(k), oracle::as_set(l), oracle::as_set(h))) {
              const Element& y = *d.begin();
              rhs += m.span_map(h, l, intersect(l, conjugate_subgroup(g, h, y)), y);
            }
            EXPECT_EQ(m.evaluate(f), m.reduce(lk, rhs));
            EXPECT_EQ(m.evaluate(f), m.reduce(lk, m.res(k, l) * m.tr(k, h)));
          }
  }
}

TEST(MackeyFunctor, ExplicitCorruptDocumentReportsDoubleCosetViolation) {
  const auto doc = io::load(PROPEQ_DATA_DIR "/constant_corrupt.json");
  const auto m = std::get<IntegerMackeyFunctor>(io::parse_functor(doc.root()));
  const auto report = check_axioms(m);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.axiom == "double coset formula") found = true;
  EXPECT_TRUE(found);
  EXPECT_FALSE(oracle::functorial(m));
}

TEST(MackeyFunctor, InfiniteDihedralFunctors) {
  for (const char* file : {"/burnside_dinf.json", "/constant_dinf.json"}) {
    const auto doc = io::load(std::string(PROPEQ_DATA_DIR) + file);
    const auto m = std::get<IntegerMackeyFunctor>(io::parse_functor(doc.root()));
    EXPECT_TRUE(check_axioms(m).ok()) << file;
    EXPECT_EQ(m.family().reps().size(), 3u);
  }
}

TEST(MackeyFunctor, RationalizationPreservesAxioms) {
  const auto g = groups::dihedral8();
  const auto r = rationalize(builtin_functor("constant:Z/2", full_family(g)));
  for (std::size_t j = 0; j < r.family().reps().size(); ++j) EXPECT_EQ(r.dim(j), 0u);
  const auto b = rationalize(burnside_mackey(full_family(g)));
  EXPECT_TRUE(check_axioms(b).ok());
  EXPECT_TRUE(oracle::functorial(b));
}

TEST(MackeyFunctor, OutsideFamilyRejected) {
  const auto g = groups::symmetric3();
  const auto m = builtin_functor("repring", abelian_family(g));
  try {
    m.res(whole_group(g), m.family().reps()[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutsideFamily);
  }
}
