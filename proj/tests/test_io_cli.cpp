#include <gtest/gtest.h>

#include <sstream>

#include "propeq/cli.hpp"
#include "propeq/io.hpp"
#include "support/oracles.hpp"

using namespace propeq;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 5 && a.substr(a.size() - 5) == ".json") a = std::string(PROPEQ_DATA_DIR) + "/" + a;
  args.insert(args.begin(), "propeq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

io::json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return io::json::parse(r.out);
}

std::string malformed(const std::string& text) {
  try {
    io::parse_functor(io::parse_text(text).root());
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedDocument);
    return e.what();
  }
  ADD_FAILURE() << "document was accepted";
  return {};
}

}  // namespace

TEST(Io, DiagnosticsNameTheOffendingField) {
  EXPECT_NE(malformed(R"({"group":"C2"})").find("missing field 'version'"), std::string::npos);
  EXPECT_NE(malformed(R"({"version":1})").find("missing field 'group'"), std::string::npos);
  EXPECT_NE(malformed(R"({"version":1,"group":"Q8"})").find("group"), std::string::npos);
  EXPECT_NE(malformed(R"({"version":1,"group":"C2","values":[{"free":"x"}],"res":[],"tr":[]})").find("values[0].free"),
            std::string::npos);
  EXPECT_NE(malformed(R"({"version":1,"group":"Z","builtin":"burnside"})").find("family"), std::string::npos);
  EXPECT_NE(malformed(R"({"version":1,"group":"C2","builtin":"nope"})").find("builtin"), std::string::npos);
  EXPECT_NE(malformed("{not json").find("invalid JSON"), std::string::npos);
}

TEST(Io, GroupsAndElements) {
  for (const std::string name : {"S3", "D8", "C2xC2", "V4", "C2^3", "C5"}) {
    const auto g = io::parse_group(io::Node(io::json(name), "group"));
    EXPECT_TRUE(g.is_finite());
  }
  const auto table = io::parse_group(io::Node(io::json::parse(R"({"kind":"table","table":[[0,1],[1,0]]})"), "group"));
  EXPECT_EQ(table.order(), 2u);
  const auto d = io::parse_group(io::Node(io::json("Dinf"), "group"));
  EXPECT_THROW(io::parse_element(io::Node(io::json::parse("[0,2]"), "g"), d), Error);
}

TEST(Io, RationalScalars) {
  const auto doc = io::parse_text(R"({"version":1,"group":"C2","family":[[],[[1,0]]],"scalar":"Q",
    "values":[{"free":1},{"free":1}],
    "res":[{"rep":1,"subgroup":[],"matrix":[["1/2"]]}],
    "tr":[{"rep":1,"subgroup":[],"matrix":[[4]]}]})");
  const auto m = std::get<RationalMackeyFunctor>(io::parse_functor(doc.root()));
  const auto& fam = m.family();
  EXPECT_EQ(m.res(fam.reps()[1], fam.reps()[0]), RatMatrix({{Rational(1, 2)}}));
  EXPECT_TRUE(check_axioms(m).ok());
}

TEST(Io, JsonEmitters) {
  EXPECT_EQ(io::to_json(Rational(3, 4)), io::json("3/4"));
  EXPECT_EQ(io::to_json(FGAbelianGroup{2, {2, 4}}), io::json::parse(R"({"free":2,"torsion":[2,4]})"));
  EXPECT_EQ(io::to_json(LaurentPolynomial::t() - LaurentPolynomial(1)), io::json::parse(R"({"0":-1,"1":1})"));
  // large integers survive as strings
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(io::to_json(big), io::json("123456789012345678901234567890"));
}

TEST(Cli, Marks) {
  const auto j = invoke_json({"marks", "c2.json"});
  EXPECT_EQ(j["marks"], io::json::parse("[[2,0],[1,1]]"));
  const auto s3 = invoke_json({"marks", "s3.json"});
  EXPECT_EQ(s3["marks"], io::json::parse("[[6,0,0,0],[3,1,0,0],[2,0,2,0],[1,1,1,1]]"));
  const auto csv = invoke({"--format", "csv", "marks", "s3.json"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("H3,1,1,1,1"), std::string::npos);
}

TEST(Cli, BurnsideProduct) {
  const auto j = invoke_json({"burnside-mul", "burnside_mul_s3.json"});
  // [S3/C2] [S3/C3] = [S3/e]
  EXPECT_EQ(j["product"], io::json::parse("[1,0,0,0]"));
}

TEST(Cli, MackeyCategoryCommands) {
  const auto h = invoke_json({"mackey", "hom-basis", "hom_basis_s3.json"});
  EXPECT_EQ(h["basis"].size(), 3u);
  EXPECT_EQ(h["rank"], 3);
  const auto c = invoke({"mackey", "compose", "compose_s3.json"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("agrees"), std::string::npos);
}

TEST(Cli, AxiomCheckExitCodes) {
  for (const char* f : {"burnside_s3.json", "repring_d8.json", "constant_c2.json", "burnside_dinf.json"})
    EXPECT_EQ(invoke({"mackey", "check", f}).code, 0) << f;
  const auto bad = invoke({"mackey", "check", "constant_corrupt.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("double coset formula"), std::string::npos);
  EXPECT_NE(bad.out.find("expected [[2]], found [[1]]"), std::string::npos);
}

TEST(Cli, Bredon) {
  auto coh = [](const io::json& j) {
    std::vector<std::string> out;
    for (const auto& a : j["cohomology"]) out.push_back(a.dump());
    return out;
  };
  EXPECT_EQ(coh(invoke_json({"bredon", "line_dinfty.json", "burnside_dinf.json"})),
            (std::vector<std::string>{R"({"free":3,"torsion":[]})", R"({"free":0,"torsion":[]})"}));
  EXPECT_EQ(coh(invoke_json({"bredon", "line_dinfty.json", "constant_dinf.json"})),
            (std::vector<std::string>{R"({"free":1,"torsion":[]})", R"({"free":0,"torsion":[]})"}));
  EXPECT_EQ(coh(invoke_json({"bredon", "line_z_cells.json", "constant_z_on_z.json"})),
            coh(invoke_json({"bredon", "line_z.json", "constant_z_on_z.json"})));
  const auto v = invoke({"-v", "bredon", "telescope_c2.json", "constant_c2.json"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("d0 = [[-1,1]]"), std::string::npos);
}

TEST(Cli, Ahss) {
  const auto r = invoke({"ahss", "e2", "line_z.json", "tower_rational_sphere.json", "--report"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E_2^{1,-n-1}"), std::string::npos);
  const auto j = invoke_json({"ahss", "e2", "orbit_s3_c2.json", "tower_burnside_s3.json"});
  ASSERT_TRUE(j.contains("entries"));
  ASSERT_EQ(j["entries"].size(), 2u);
  for (const auto& e : j["entries"]) EXPECT_EQ(e["p"], 0);
  EXPECT_EQ(j["entries"][0]["group"]["torsion"], io::json::parse("[2]"));
  EXPECT_EQ(j["entries"][1]["group"]["free"], 2);
}

TEST(Cli, RationalCommands) {
  const auto e = invoke_json({"rational", "ext", "q_t1.json", "q_t1.json"});
  EXPECT_EQ(e["ext0"]["dimension"], 1);
  EXPECT_EQ(e["ext1"]["dimension"], 1);
  const auto z = invoke_json({"rational", "ext", "q_t1.json", "q_tm1.json"});
  EXPECT_EQ(z["ext1"]["dimension"], 0);
  const auto w = invoke_json({"rational", "weyl", "burnside_q_c2.json"});
  ASSERT_EQ(w["components"].size(), 2u);
  EXPECT_EQ(w["components"][0]["dimension"], 1);
  EXPECT_EQ(w["components"][1]["dimension"], 1);
  const auto c = invoke_json({"rational", "weyl", "constant_q_c2.json"});
  EXPECT_EQ(c["components"][1]["dimension"], 0);
  EXPECT_EQ(invoke({"rational", "weyl", "burnside_s3.json"}).code, 2);
}

TEST(Cli, Limtower) {
  const auto j = invoke_json({"limtower", "limtower_c2cube.json"});
  EXPECT_EQ(j["lim"]["free"], 16);
  EXPECT_EQ(j["lim1"]["free"], 0);
  EXPECT_EQ(j["mittag_leffler"], "holds");
  const auto d = invoke_json({"limtower", "limtower_doubling.json"});
  EXPECT_EQ(d["mittag_leffler"], "indeterminate");
}

TEST(Cli, MalformedInputsExitTwo) {
  const auto coeff = invoke({"bredon", "bad_coeff.json", "constant_z_on_z.json"});
  EXPECT_EQ(coeff.code, 2);
  EXPECT_NE(coeff.err.find("cells[1].boundary[1].coeff"), std::string::npos);
  const auto span = invoke({"mackey", "compose", "bad_span.json"});
  EXPECT_EQ(span.code, 2);
  EXPECT_NE(span.err.find("beta.terms[0]"), std::string::npos);
  EXPECT_EQ(invoke({"marks", "bad_version.json"}).code, 2);
  EXPECT_EQ(invoke({"marks", "missing.json"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "marks", "c2.json"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "mackey", "hom-basis", "hom_basis_s3.json"},
           {"ahss", "e2", "line_dinfty.json", "tower_rational_sphere.json"},
           {"--format", "csv", "rational", "weyl", "burnside_q_c2.json"}}) {
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}
