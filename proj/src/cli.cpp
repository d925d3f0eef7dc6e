#include "propeq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "propeq/io.hpp"
#include "propeq/propeq.hpp"

namespace propeq::cli {
namespace {

using io::json;

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  json data = json::object();
  std::vector<Table> tables;
  std::vector<std::string> notes;
  int status = 0;
};

enum class Format { Table, Csv, Json };

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void render(const Report& r, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << r.data.dump(2) << "\n";
    return;
  }
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) out << "\n";
    first = false;
    if (f == Format::Csv) {
      std::vector<std::string> cells;
      for (const auto& h : t.header) cells.push_back(csv_cell(h));
      auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << "\n";
      };
      line(t.header);
      for (const auto& row : t.rows) line(row);
      continue;
    }
    if (!t.title.empty()) out << t.title << "\n";
    std::vector<std::size_t> w(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) w[i] = t.header[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += "  ";
        s += row[i] + std::string(w[i] - row[i].size(), ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  }
  if (f == Format::Table)
    for (const auto& n : r.notes) out << n << "\n";
}

// ------------------------------------------------------------ formatting helpers

std::string subgroup_label(const Group& g, const FiniteSubgroup& h) {
  const auto gens = generating_set(g, h);
  if (gens.empty()) return "<e>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i].str();
  return s + ">";
}

json subgroup_json(const Group& g, const FiniteSubgroup& h) {
  json a = json::array();
  for (const auto& x : generating_set(g, h)) a.push_back(io::to_json(x));
  return a;
}

std::string group_label(const FGAbelianGroup& a, bool rational) {
  if (!rational) return a.str();
  if (a.free_rank == 0) return "0";
  return a.free_rank == 1 ? "Q" : "Q^" + std::to_string(a.free_rank);
}

template <class T>
std::string matrix_label(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

io::Document load(const std::string& path) { return io::load(path); }

// ------------------------------------------------------------ burnside

Report cmd_marks(const std::string& path) {
  const auto doc = load(path);
  const Group g = io::parse_group(doc.root()["group"]);
  const auto ring = io::guarded(doc.root()["group"], [&] { return BurnsideRing::of(g); });
  Report r;
  Table classes{"subgroup classes of " + g.name(), {"class", "order", "generators"}, {}};
  Table marks{"table of marks (row: G/H, column: fixed points of K)", {"G/H \\ K"}, {}};
  json jc = json::array();
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    const auto& h = ring->classes()[i];
    classes.rows.push_back({"H" + std::to_string(i), std::to_string(h.order()), subgroup_label(g, h)});
    marks.header.push_back("H" + std::to_string(i));
    jc.push_back({{"order", h.order()}, {"generators", subgroup_json(g, h)}});
  }
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    std::vector<std::string> row{"H" + std::to_string(i)};
    for (std::size_t j = 0; j < ring->rank(); ++j) row.push_back(ring->marks()(i, j).str());
    marks.rows.push_back(std::move(row));
  }
  r.tables = {classes, marks};
  r.notes.push_back("marks = " + matrix_label(ring->marks()));
  r.data = {{"group", g.name()}, {"classes", jc}, {"marks", io::to_json(ring->marks())}};
  return r;
}

BurnsideElement parse_burnside_element(const io::Node& n, const BurnsideRingPtr& ring) {
  const Group& g = ring->ambient();
  auto items = n.items();
  if (!items.empty() && !items.front().is_object()) {
    if (items.size() != ring->rank())
      n.error("expected " + std::to_string(ring->rank()) + " coefficients, one per subgroup class");
    auto e = BurnsideElement::zero(ring);
    for (std::size_t i = 0; i < items.size(); ++i) e.coeffs[i] = items[i].integer();
    return e;
  }
  auto e = BurnsideElement::zero(ring);
  for (const auto& t : items) {
    const auto h = io::parse_subgroup(t["orbit"], g);
    const auto i = io::guarded(t["orbit"], [&] { return ring->class_of(h); });
    e.coeffs[i] += t.has("coeff") ? t["coeff"].integer() : Integer(1);
  }
  return e;
}

Report cmd_burnside_mul(const std::string& path) {
  const auto doc = load(path);
  const auto root = doc.root();
  const Group g = io::parse_group(root["group"]);
  const auto ring = io::guarded(root["group"], [&] { return BurnsideRing::of(g); });
  const auto a = parse_burnside_element(root["a"], ring);
  const auto b = parse_burnside_element(root["b"], ring);
  const auto p = multiply(a, b);
  Report r;
  Table t{"product in A(" + g.name() + ") on the basis [G/H]", {"class", "generators", "a", "b", "a*b"}, {}};
  json coeffs = json::array();
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    t.rows.push_back({"H" + std::to_string(i), subgroup_label(g, ring->classes()[i]), a.coeffs[i].str(),
                      b.coeffs[i].str(), p.coeffs[i].str()});
    coeffs.push_back(io::to_json(p.coeffs[i]));
  }
  json marks = json::array();
  for (const auto& m : ring->marks_of(p.coeffs)) marks.push_back(io::to_json(m));
  r.tables = {t};
  r.data = {{"group", g.name()}, {"product", coeffs}, {"marks", marks}};
  return r;
}

// ------------------------------------------------------------ mackey

json span_json(const Group& g, const TransitiveSpan& s) {
  return {{"mid", subgroup_json(g, s.mid)}, {"gamma", io::to_json(s.gamma)}};
}

json hom_json(const Group& g, const MackeyHomElement& e) {
  json terms = json::array();
  for (const auto& [s, c] : e.terms) {
    auto j = span_json(g, s);
    j["coeff"] = io::to_json(c);
    terms.push_back(j);
  }
  return {{"source", subgroup_json(g, e.source)}, {"target", subgroup_json(g, e.target)}, {"terms", terms}};
}

Table hom_table(const Group& g, const MackeyHomElement& e, const std::string& title) {
  Table t{title, {"coeff", "L", "gamma"}, {}};
  for (const auto& [s, c] : e.terms) t.rows.push_back({c.str(), subgroup_label(g, s.mid), s.gamma.str()});
  return t;
}

Report cmd_hom_basis(const std::string& path) {
  const auto doc = load(path);
  const auto root = doc.root();
  const Group g = io::parse_group(root["group"]);
  const auto h = io::parse_subgroup(root["source"], g);
  const auto k = io::parse_subgroup(root["target"], g);
  const auto basis = io::guarded(root, [&] { return hom_basis(g, h, k); });
  const auto rank = hom_rank(g, h, k);
  Report r;
  Table t{"basis of A_G(" + subgroup_label(g, h) + ", " + subgroup_label(g, k) + ")", {"#", "L", "gamma"}, {}};
  json jb = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    t.rows.push_back({std::to_string(i), subgroup_label(g, basis[i].mid), basis[i].gamma.str()});
    jb.push_back(span_json(g, basis[i]));
  }
  Table cosets{"double cosets K gamma H", {"gamma", "K n gamma H gamma^-1", "rank A"}, {}};
  for (const auto& [x, y] : restrict_orbit_decomposition(g, k, h))
    cosets.rows.push_back({x.str(), subgroup_label(g, y), std::to_string(burnside_rank(g, y))});
  r.tables = {t, cosets};
  const bool ok = rank == basis.size();
  r.notes.push_back("rank = " + std::to_string(basis.size()) + ", double coset count = " + std::to_string(rank) +
                    (ok ? "" : "  MISMATCH"));
  r.status = ok ? 0 : 1;
  r.data = {{"basis", jb}, {"rank", basis.size()}, {"double_coset_rank", rank}};
  return r;
}

Report cmd_compose(const std::string& path) {
  const auto doc = load(path);
  const auto root = doc.root();
  const Group g = io::parse_group(root["group"]);
  const auto beta = io::parse_hom_element(root["beta"], g);
  const auto alpha = io::parse_hom_element(root["alpha"], g);
  const auto c = io::guarded(root, [&] { return compose(g, beta, alpha); });
  Report r;
  r.tables = {hom_table(g, c, "alpha o beta")};
  r.data = {{"composite", hom_json(g, c)}};
  if (g.is_finite()) {
    const auto o = pullback_oracle(g, beta, alpha);
    const bool ok = o == c;
    r.data["oracle_agrees"] = ok;
    r.notes.push_back(ok ? "pullback oracle agrees" : "pullback oracle DISAGREES");
    if (!ok) {
      r.tables.push_back(hom_table(g, o, "pullback oracle"));
      r.status = 1;
    }
  }
  return r;
}

template <class Scalar>
Report check_report(const MackeyFunctor<Scalar>& m) {
  const auto rep = check_axioms(m);
  Report r;
  Table t{"axiom violations", {"axiom", "location", "detail"}, {}};
  json jv = json::array();
  for (const auto& v : rep.violations) {
    t.rows.push_back({v.axiom, v.location, v.detail});
    jv.push_back({{"axiom", v.axiom}, {"location", v.location}, {"detail", v.detail}});
  }
  if (!rep.ok()) r.tables.push_back(t);
  r.notes.push_back(m.name() + ": " + (rep.ok() ? "all Mackey axioms hold"
                                                 : std::to_string(rep.violations.size()) + " violation(s)"));
  r.data = {{"functor", m.name()}, {"ok", rep.ok()}, {"violations", jv}};
  r.status = rep.ok() ? 0 : 1;
  return r;
}

Report cmd_check(const std::string& path) {
  const auto doc = load(path);
  const auto f = io::parse_functor(doc.root());
  return std::visit([](const auto& m) { return check_report(m); }, f);
}

// ------------------------------------------------------------ bredon and ahss

Report complex_violations(const GCWComplex& x, const SubgroupFamily& fam) {
  Report r;
  const auto v = validate(x, &fam);
  if (v.empty()) return r;
  Table t{"complex violations", {"location", "detail"}, {}};
  json jv = json::array();
  for (const auto& c : v) {
    t.rows.push_back({c.location, c.detail});
    jv.push_back({{"location", c.location}, {"detail", c.detail}});
  }
  r.tables = {t};
  r.data = {{"violations", jv}};
  r.status = 1;
  return r;
}

Report cmd_bredon(const std::string& cpath, const std::string& fpath, bool verbose) {
  const auto cdoc = load(cpath);
  const auto fdoc = load(fpath);
  const auto x = io::parse_complex(cdoc.root());
  const auto f = io::parse_functor(fdoc.root());
  return std::visit(
      [&](const auto& m) {
        using Scalar = typename std::decay_t<decltype(m)>::scalar_type;
        const bool rational = std::is_same_v<Scalar, Rational>;
        if (auto bad = complex_violations(x, m.family()); bad.status) return bad;
        const auto c = io::guarded(fdoc.root(), [&] { return bredon_cochain(x, m); });
        const auto h = cohomology(c);
        Report r;
        Table t{"H^n_G(" + x.name + "; " + m.name() + ")", {"n", "H^n"}, {}};
        json jh = json::array();
        for (std::size_t n = 0; n < h.size(); ++n) {
          t.rows.push_back({std::to_string(n), group_label(h[n], rational)});
          jh.push_back(io::to_json(h[n]));
        }
        r.tables.push_back(t);
        if (verbose)
          for (std::size_t n = 0; n < c.differentials.size(); ++n)
            r.notes.push_back("d" + std::to_string(n) + " = " + matrix_label(c.differentials[n]));
        r.data = {{"complex", x.name}, {"functor", m.name()}, {"scalar", rational ? "Q" : "Z"}, {"cohomology", jh}};
        return r;
      },
      f);
}

template <class Scalar>
Report ahss_report(const GCWComplex& x, const CoefficientTower<Scalar>& tower, bool report, bool verbose) {
  const bool rational = std::is_same_v<Scalar, Rational>;
  if (!tower.layers.empty())
    if (auto bad = complex_violations(x, tower.layers.begin()->second.family()); bad.status) return bad;
  const auto e1 = e1_page(x, tower);
  const auto e2 = e2_page(e1);
  Report r;
  auto page_table = [&](const SSPage<Scalar>& page) {
    Table t{"E_" + std::to_string(page.r) + "^{p,q}", {"q \\ p"}, {}};
    for (std::size_t p = 0; p <= page.max_p; ++p) t.header.push_back(std::to_string(p));
    for (int q = page.q_max; q >= page.q_min; --q) {
      std::vector<std::string> row{std::to_string(q)};
      for (std::size_t p = 0; p <= page.max_p; ++p)
        row.push_back(page.known(p, q) ? group_label(page.at(p, q), rational) : "?");
      t.rows.push_back(std::move(row));
    }
    return t;
  };
  if (verbose) r.tables.push_back(page_table(e1));
  r.tables.push_back(page_table(e2));
  json entries = json::array();
  for (const auto& [pq, a] : e2.entries)
    entries.push_back({{"p", pq.first}, {"q", pq.second}, {"group", io::to_json(a)}});
  json unknown = json::array();
  for (int q : e2.unknown_rows) unknown.push_back(q);
  r.data = {{"complex", x.name},
            {"scalar", rational ? "Q" : "Z"},
            {"page", 2},
            {"q_range", {e2.q_min, e2.q_max}},
            {"entries", entries},
            {"unknown_rows", unknown}};
  if (report) {
    const auto c = collapse_report(x, e2);
    Table t{"abutment (collapses at E_" + std::to_string(c.collapse_page) + ")",
            {"n", "E_2^{0,-n}", "E_2^{1,-n-1}", "status"},
            {}};
    json pieces = json::array();
    for (const auto& p : c.pieces) {
      auto lbl = [&](const std::optional<FGAbelianGroup>& a) { return a ? group_label(*a, rational) : "?"; };
      const std::string status =
          p.exact ? "determined" : (p.extension_problem ? "extension problem" : "incomplete");
      t.rows.push_back({std::to_string(p.degree), lbl(p.column0), lbl(p.column1), status});
      pieces.push_back({{"degree", p.degree},
                        {"column0", p.column0 ? io::to_json(*p.column0) : json(nullptr)},
                        {"column1", p.column1 ? io::to_json(*p.column1) : json(nullptr)},
                        {"status", status}});
    }
    if (!c.pieces.empty()) r.tables.push_back(t);
    for (const auto& n : c.notes) r.notes.push_back(n);
    r.data["report"] = {{"collapse_page", c.collapse_page}, {"pieces", pieces}, {"notes", c.notes}};
  }
  return r;
}

Report cmd_ahss(const std::string& cpath, const std::string& tpath, bool report, bool verbose) {
  const auto cdoc = load(cpath);
  const auto tdoc = load(tpath);
  const auto x = io::parse_complex(cdoc.root());
  const auto t = io::parse_tower(tdoc.root());
  return std::visit(
      [&](const auto& tower) {
        return io::guarded(tdoc.root(), [&] { return ahss_report(x, tower, report, verbose); });
      },
      t);
}

// ------------------------------------------------------------ rational

std::string cyclic_label(const LaurentPolynomial& p) { return "Q[t,t^-1]/(" + p.str() + ")"; }

std::string dim_label(const CyclicDecomposition& d) {
  const auto n = d.dimension();
  return n ? std::to_string(*n) : "inf";
}

std::string summands_label(const CyclicDecomposition& d) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < d.free_rank; ++i) parts.push_back("Q[t,t^-1]");
  for (const auto& p : d.torsion) parts.push_back(cyclic_label(p));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

json decomposition_json(const CyclicDecomposition& d) {
  json t = json::array();
  for (const auto& p : d.torsion) t.push_back(io::to_json(p));
  const auto n = d.dimension();
  return {{"dimension", n ? json(*n) : json(nullptr)}, {"free", d.free_rank}, {"torsion", t}};
}

Report cmd_ext(const std::string& mpath, const std::string& npath) {
  const auto mdoc = load(mpath);
  const auto ndoc = load(npath);
  const auto m = io::parse_laurent_module(mdoc.root());
  const auto n = io::parse_laurent_module(ndoc.root());
  const auto e = ext_laurent(m, n);
  Report r;
  Table t{"Ext over Q[t,t^-1]", {"k", "dim_Q", "summands"}, {}};
  t.rows.push_back({"0", dim_label(e.ext0), summands_label(e.ext0)});
  t.rows.push_back({"1", dim_label(e.ext1), summands_label(e.ext1)});
  r.tables = {t};
  r.notes.push_back("Ext^k = 0 for k >= 2");
  r.data = {{"ext0", decomposition_json(e.ext0)}, {"ext1", decomposition_json(e.ext1)}};
  return r;
}

Report cmd_weyl(const std::string& path, bool verbose) {
  const auto doc = load(path);
  const auto f = io::parse_functor(doc.root());
  const auto* m = std::get_if<RationalMackeyFunctor>(&f);
  if (!m) fail(ErrorKind::NotRational, "rational weyl needs a functor with \"scalar\": \"Q\"");
  const auto comps = io::guarded(doc.root(), [&] { return weyl_decompose(*m); });
  const Group& g = m->ambient();
  Report r;
  Table t{"Weyl components of " + m->name(), {"H", "|W_G H|", "dim"}, {}};
  json jc = json::array();
  for (const auto& c : comps) {
    t.rows.push_back({subgroup_label(g, c.subgroup), std::to_string(c.weyl.transversal.size()),
                      std::to_string(c.dimension)});
    json acts = json::array();
    for (std::size_t i = 0; i < c.action.size(); ++i) {
      acts.push_back({{"element", io::to_json(c.weyl.transversal[i])}, {"matrix", io::to_json(c.action[i])}});
      if (verbose)
        r.notes.push_back(subgroup_label(g, c.subgroup) + ": " + c.weyl.transversal[i].str() + " acts by " +
                          matrix_label(c.action[i]));
    }
    jc.push_back({{"subgroup", subgroup_json(g, c.subgroup)},
                  {"weyl_order", c.weyl.transversal.size()},
                  {"dimension", c.dimension},
                  {"action", acts}});
  }
  r.tables = {t};
  r.data = {{"functor", m->name()}, {"components", jc}};
  return r;
}

// ------------------------------------------------------------ limtower

Report cmd_limtower(const std::string& path) {
  const auto doc = load(path);
  const auto t = io::parse_limtower(doc.root());
  const auto l = io::guarded(doc.root(), [&] { return lim_lim1(t.groups, t.maps); });
  Report r;
  Table tower{"tower A_0 <- A_1 <- ... <- A_N", {"n", "A_n", "map to A_{n-1}"}, {}};
  for (std::size_t n = 0; n < t.groups.size(); ++n)
    tower.rows.push_back({std::to_string(n), t.groups[n].str(), n ? matrix_label(t.maps[n - 1]) : "-"});
  Table res{"limits of the truncation", {"lim", "lim^1", "Mittag-Leffler", "all surjective"}, {}};
  res.rows.push_back({l.lim.str(), l.lim1.str(), to_string(l.ml), l.all_surjective ? "yes" : "no"});
  r.tables = {tower, res};
  r.data = {{"lim", io::to_json(l.lim)},
            {"lim1", io::to_json(l.lim1)},
            {"mittag_leffler", to_string(l.ml)},
            {"all_surjective", l.all_surjective}};
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant stable homotopy computations: Burnside rings, Mackey functors, Bredon cohomology"};
  app.name("propeq");
  app.require_subcommand(1, 1);
  std::string format = "table";
  bool verbose = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "Print intermediate data");

  std::function<Report()> action;
  std::string p1, p2;
  bool report = false;

  auto one = [&](CLI::App* sub, const char* what, auto fn) {
    sub->add_option("file", p1, what)->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(); }; });
  };

  auto* marks = app.add_subcommand("marks", "Table of marks of a finite group");
  one(marks, "group document", [&] { return cmd_marks(p1); });
  auto* mul = app.add_subcommand("burnside-mul", "Product in the Burnside ring");
  one(mul, "document with group, a, b", [&] { return cmd_burnside_mul(p1); });

  auto* mackey = app.add_subcommand("mackey", "Mackey category and Mackey functors");
  mackey->require_subcommand(1, 1);
  one(mackey->add_subcommand("hom-basis", "Transitive-span basis of A_G(H, K)"), "span document",
      [&] { return cmd_hom_basis(p1); });
  one(mackey->add_subcommand("compose", "Compose two span combinations"), "composition document",
      [&] { return cmd_compose(p1); });
  one(mackey->add_subcommand("check", "Check the Mackey functor axioms"), "functor document",
      [&] { return cmd_check(p1); });

  auto* bredon = app.add_subcommand("bredon", "Bredon cohomology of a proper G-CW complex");
  bredon->add_option("complex", p1, "complex document")->required();
  bredon->add_option("functor", p2, "coefficient functor document")->required();
  bredon->callback([&] { action = [&] { return cmd_bredon(p1, p2, verbose); }; });

  auto* ahss = app.add_subcommand("ahss", "Atiyah-Hirzebruch spectral sequence");
  ahss->require_subcommand(1, 1);
  auto* e2 = ahss->add_subcommand("e2", "E_2 page from a complex and a coefficient tower");
  e2->add_option("complex", p1, "complex document")->required();
  e2->add_option("tower", p2, "coefficient tower document")->required();
  e2->add_flag("--report", report, "Collapse report and abutment pieces");
  e2->callback([&] { action = [&] { return cmd_ahss(p1, p2, report, verbose); }; });

  auto* rational = app.add_subcommand("rational", "Rational Mackey functors");
  rational->require_subcommand(1, 1);
  auto* ext = rational->add_subcommand("ext", "Ext over Q[t,t^-1]");
  ext->add_option("M", p1, "Laurent module document")->required();
  ext->add_option("N", p2, "Laurent module document")->required();
  ext->callback([&] { action = [&] { return cmd_ext(p1, p2); }; });
  one(rational->add_subcommand("weyl", "Weyl-group decomposition of a rational Mackey functor"), "functor document",
      [&] { return cmd_weyl(p1, verbose); });

  one(app.add_subcommand("limtower", "lim and lim^1 of a finite inverse system"), "tower document",
      [&] { return cmd_limtower(p1); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  try {
    const Report r = action();
    render(r, f, out);
    return r.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace propeq::cli
