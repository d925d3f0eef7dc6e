#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "propeq/ahss.hpp"
#include "propeq/builtin_functors.hpp"
#include "propeq/burnside.hpp"
#include "propeq/gcw.hpp"
#include "propeq/laurent.hpp"
#include "propeq/span.hpp"

namespace propeq::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::size_t kClosureCap = 100000;

/// A JSON value together with its path in the document, for diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::MalformedDocument, (path_.empty() ? std::string("document") : path_) + ": " + msg);
  }

  bool is_object() const { return j_->is_object(); }
  bool is_array() const { return j_->is_array(); }
  bool is_string() const { return j_->is_string(); }
  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node operator[](const std::string& key) const {
    if (!j_->is_object()) error("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) error("missing field '" + key + "'");
    return Node(*it, child(key));
  }
  std::optional<Node> get(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return (*this)[key];
  }
  Node operator[](std::size_t i) const { return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]"); }

  std::vector<Node> items() const {
    if (!j_->is_array()) error("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.push_back((*this)[i]);
    return out;
  }
  std::vector<std::pair<std::string, Node>> entries() const {
    if (!j_->is_object()) error("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it) out.emplace_back(it.key(), Node(it.value(), child(it.key())));
    return out;
  }

  std::string str() const {
    if (!j_->is_string()) error("expected a string");
    return j_->get<std::string>();
  }
  std::int64_t int64() const {
    if (!j_->is_number_integer()) error("expected an integer");
    return j_->get<std::int64_t>();
  }
  std::size_t size() const {
    const auto v = int64();
    if (v < 0) error("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  /// Integers may be JSON numbers or decimal strings.
  Integer integer() const {
    if (j_->is_number_integer()) return Integer(j_->get<std::int64_t>());
    if (j_->is_string()) {
      const auto s = j_->get<std::string>();
      try {
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw std::runtime_error("");
        return Integer(s.c_str());
      } catch (...) {
      }
    }
    error("expected an integer");
  }
  /// Rationals may be integers or strings "p/q".
  Rational rational() const {
    if (j_->is_number_integer()) return Rational(j_->get<std::int64_t>());
    if (j_->is_string()) {
      const auto s = j_->get<std::string>();
      try {
        if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) throw std::runtime_error("");
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s.c_str()));
        const Integer q(s.substr(slash + 1).c_str());
        if (q == 0) throw std::runtime_error("");
        return Rational(Integer(s.substr(0, slash).c_str()), q);
      } catch (...) {
      }
    }
    error("expected a rational number");
  }
  template <class Scalar>
  Scalar scalar() const {
    if constexpr (std::is_same_v<Scalar, Integer>)
      return integer();
    else
      return rational();
  }

 private:
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* j_;
  std::string path_;
};

/// Runs `f`, turning library errors into diagnostics at `at`.
template <class F>
auto guarded(const Node& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedDocument) throw;
    at.error(e.what());
  }
}

/// Parsed document with its root node.
struct Document {
  std::shared_ptr<json> data;
  Node root() const { return Node(*data, ""); }
};

inline Document parse_text(const std::string& text, const std::string& name = "document") {
  auto j = std::make_shared<json>();
  try {
    *j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::MalformedDocument, name + ": invalid JSON: " + e.what());
  }
  Document d{j};
  const Node root = d.root();
  if (!root.is_object()) root.error("top level must be an object");
  if (!root.has("version")) root.error("missing field 'version'");
  if (root["version"].int64() != kSchemaVersion)
    root["version"].error("unsupported schema version " + root.raw()["version"].dump());
  return d;
}

inline Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::MalformedDocument, path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_text(text, path);
  } catch (const Error& e) {
    fail(ErrorKind::MalformedDocument, path + ": " + std::string(e.what()).substr(sizeof("MalformedDocument: ") - 1));
  }
}

// ---------------------------------------------------------------- groups

inline Group builtin_group(const Node& n) {
  const auto s = n.str();
  if (s == "S3") return groups::symmetric3();
  if (s == "D8") return groups::dihedral8();
  if (s == "C2xC2" || s == "V4") return groups::klein_four();
  if (s == "Z") return groups::integers();
  if (s == "Dinf") return groups::infinite_dihedral();
  if (s.rfind("C2^", 0) == 0 && s.size() > 3 && s.find_first_not_of("0123456789", 3) == std::string::npos)
    return groups::elementary_abelian2(std::stoul(s.substr(3)));
  if (s.size() > 1 && s[0] == 'C' && s.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto k = std::stoul(s.substr(1));
    if (k == 0) n.error("cyclic group order must be positive");
    return groups::cyclic(k);
  }
  n.error("unknown group name '" + s + "'");
}

inline Element parse_element(const Node& n) {
  std::vector<std::int64_t> code;
  for (const auto& x : n.items()) code.push_back(x.int64());
  return Element(std::move(code));
}

inline Element parse_element(const Node& n, const Group& g) {
  Element e = parse_element(n);
  if (!g.contains(e)) n.error("element " + e.str() + " is not in group " + g.name());
  return e;
}

inline Group parse_group(const Node& n) {
  if (n.is_string()) return builtin_group(n);
  const auto kind = n["kind"].str();
  const std::string name = n.has("name") ? n["name"].str() : "";
  if (kind == "permutation") {
    const auto degree = n["degree"].size();
    std::vector<Element> gens;
    for (const auto& x : n["generators"].items()) gens.push_back(parse_element(x));
    return guarded(n, [&] { return Group::permutation(degree, gens, name); });
  }
  if (kind == "table") {
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& r : n["table"].items()) {
      rows.emplace_back();
      for (const auto& x : r.items()) rows.back().push_back(x.size());
    }
    return guarded(n, [&] { return Group::table(rows, name); });
  }
  if (kind == "free_abelian") {
    const auto rank = n["rank"].size();
    return guarded(n, [&] { return Group::free_abelian(rank, name); });
  }
  if (kind == "semidirect") {
    const auto rank = n["rank"].size();
    const Group f = parse_group(n["finite"]);
    std::vector<std::vector<std::vector<std::int64_t>>> action;
    for (const auto& m : n["action"].items()) {
      action.emplace_back();
      for (const auto& r : m.items()) {
        action.back().emplace_back();
        for (const auto& x : r.items()) action.back().back().push_back(x.int64());
      }
    }
    return guarded(n, [&] { return Group::semidirect(rank, f, action, name); });
  }
  n["kind"].error("unknown group kind '" + kind + "'");
}

/// A subgroup is given by generators: either a bare list or {"generators": [...]}.
inline FiniteSubgroup parse_subgroup(const Node& n, const Group& g) {
  const Node gens = n.is_object() ? n["generators"] : n;
  std::vector<Element> elems;
  for (const auto& x : gens.items()) elems.push_back(parse_element(x, g));
  return guarded(n, [&] { return closure(g, elems, kClosureCap); });
}

inline FGAbelianGroup parse_abelian(const Node& n) {
  FGAbelianGroup a;
  if (n.has("free")) a.free_rank = n["free"].size();
  if (n.has("torsion"))
    for (const auto& t : n["torsion"].items()) a.torsion.push_back(t.integer());
  guarded(n, [&] {
    a.validate();
    return 0;
  });
  return a;
}

template <class Scalar>
Matrix<Scalar> parse_matrix(const Node& n, std::optional<std::size_t> rows = {}, std::optional<std::size_t> cols = {}) {
  std::vector<std::vector<Scalar>> data;
  for (const auto& r : n.items()) {
    data.emplace_back();
    for (const auto& x : r.items()) data.back().push_back(x.template scalar<Scalar>());
    if (data.back().size() != data.front().size()) r.error("ragged matrix row");
  }
  if (rows && data.size() != *rows)
    n.error("expected " + std::to_string(*rows) + " rows, got " + std::to_string(data.size()));
  const std::size_t c = data.empty() ? cols.value_or(0) : data.front().size();
  if (cols && c != *cols) n.error("expected " + std::to_string(*cols) + " columns, got " + std::to_string(c));
  return Matrix<Scalar>::from_rows(data, c);
}

// ---------------------------------------------------------------- families and functors

inline std::shared_ptr<const SubgroupFamily> parse_family(const Node* n, const Group& g) {
  if (!n) {
    if (!g.is_finite()) fail(ErrorKind::MalformedDocument, "family: required for infinite groups");
    return full_family(g);
  }
  if (n->is_string()) {
    const auto s = n->str();
    if (s == "all") return guarded(*n, [&] { return full_family(g); });
    if (s == "abelian") return guarded(*n, [&] { return abelian_family(g); });
    if (s == "trivial") return std::make_shared<const SubgroupFamily>(g, std::vector<FiniteSubgroup>{trivial_subgroup(g)});
    n->error("unknown family '" + s + "'");
  }
  const Node reps_node = n->is_object() ? (*n)["reps"] : *n;
  std::vector<FiniteSubgroup> reps;
  for (const auto& r : reps_node.items()) reps.push_back(parse_subgroup(r, g));
  std::vector<DeclaredWitness> declared;
  if (n->is_object() && n->has("declared"))
    for (const auto& d : (*n)["declared"].items()) {
      FiniteSubgroup y = parse_subgroup(d["subgroup"], g);
      const auto rep = d["rep"].size();
      Element w = parse_element(d["witness"], g);
      declared.push_back({std::move(y), rep, std::move(w)});
    }
  return guarded(*n, [&] { return std::make_shared<const SubgroupFamily>(g, reps, declared); });
}

using AnyFunctor = std::variant<IntegerMackeyFunctor, RationalMackeyFunctor>;

inline bool is_rational_scalar(const Node& n) {
  if (!n.has("scalar")) return false;
  const auto s = n["scalar"].str();
  if (s == "Q") return true;
  if (s == "Z") return false;
  n["scalar"].error("scalar must be \"Z\" or \"Q\"");
}

template <class Scalar>
MackeyFunctor<Scalar> parse_explicit_functor(const Node& n, std::shared_ptr<const SubgroupFamily> fam) {
  const Group& g = fam->ambient();
  const auto nreps = fam->reps().size();
  const auto vnode = n["values"];
  std::vector<FGAbelianGroup> values;
  for (const auto& v : vnode.items()) values.push_back(parse_abelian(v));
  if (values.size() != nreps)
    vnode.error("expected " + std::to_string(nreps) + " values, one per family rep, got " + std::to_string(values.size()));
  auto dim = [&](std::size_t j) { return values[j].generator_count(); };
  std::vector<std::map<FiniteSubgroup, Matrix<Scalar>>> res(nreps), tr(nreps);
  auto read_maps = [&](const char* key, auto& into, bool transfer) {
    if (!n.has(key)) return;
    for (const auto& e : n[key].items()) {
      const auto rep = e["rep"].size();
      if (rep >= nreps) e["rep"].error("no such family rep");
      const auto y = parse_subgroup(e["subgroup"], g);
      const auto obj = fam->find(y);
      if (!obj) e["subgroup"].error("subgroup " + y.str() + " is not a family object");
      if (!y.is_subgroup_of(fam->reps()[rep])) e["subgroup"].error("subgroup is not contained in rep " + std::to_string(rep));
      const auto k = fam->objects()[*obj].rep;
      const auto m = transfer ? parse_matrix<Scalar>(e["matrix"], dim(rep), dim(k))
                              : parse_matrix<Scalar>(e["matrix"], dim(k), dim(rep));
      into[rep][y] = m;
    }
  };
  read_maps("res", res, false);
  read_maps("tr", tr, true);
  // maps from a rep to itself default to the identity
  for (std::size_t i = 0; i < nreps; ++i) {
    res[i].try_emplace(fam->reps()[i], Matrix<Scalar>::identity(dim(i)));
    tr[i].try_emplace(fam->reps()[i], Matrix<Scalar>::identity(dim(i)));
  }
  std::vector<std::vector<std::pair<Element, Matrix<Scalar>>>> action(nreps);
  if (n.has("action"))
    for (const auto& e : n["action"].items()) {
      const auto rep = e["rep"].size();
      if (rep >= nreps) e["rep"].error("no such family rep");
      Element x = parse_element(e["element"], g);
      auto m = parse_matrix<Scalar>(e["matrix"], dim(rep), dim(rep));
      action[rep].emplace_back(std::move(x), std::move(m));
    }
  const std::string name = n.has("name") ? n["name"].str() : "data";
  return guarded(n, [&] { return functor_from_data<Scalar>(fam, values, res, tr, action, name); });
}

/// A functor body: {"builtin": name} or explicit data, over the given
/// family. "scalar": "Q" (or builtin "constant:Q") gives a rational functor.
inline AnyFunctor parse_functor_body(const Node& n, std::shared_ptr<const SubgroupFamily> fam) {
  const bool rational = is_rational_scalar(n);
  if (n.has("builtin")) {
    const auto name = n["builtin"].str();
    auto m = guarded(n["builtin"], [&] { return builtin_functor(name, fam); });
    if (rational || name == "constant:Q") return rationalize(m);
    return m;
  }
  if (rational) return parse_explicit_functor<Rational>(n, fam);
  return parse_explicit_functor<Integer>(n, fam);
}

/// Functor document: {"version":1, "group":G, "family":F?, ...body}.
inline AnyFunctor parse_functor(const Node& n) {
  const Group g = parse_group(n["group"]);
  const auto fnode = n.get("family");
  const auto fam = fnode ? parse_family(&*fnode, g) : parse_family(nullptr, g);
  return parse_functor_body(n, fam);
}

// ---------------------------------------------------------------- spans

inline TransitiveSpan parse_span(const Node& n, const Group& g, const FiniteSubgroup& source,
                                 const FiniteSubgroup& target) {
  FiniteSubgroup mid = parse_subgroup(n["mid"], g);
  Element gamma = n.has("gamma") ? parse_element(n["gamma"], g) : g.identity();
  TransitiveSpan s{source, target, std::move(mid), std::move(gamma)};
  guarded(n, [&] {
    validate_span(g, s);
    return 0;
  });
  return s;
}

inline MackeyHomElement parse_hom_element(const Node& n, const Group& g) {
  const auto h = parse_subgroup(n["source"], g);
  const auto k = parse_subgroup(n["target"], g);
  std::vector<std::pair<TransitiveSpan, Integer>> terms;
  for (const auto& t : n["terms"].items())
    terms.emplace_back(parse_span(t, g, h, k), t.has("coeff") ? t["coeff"].integer() : Integer(1));
  return guarded(n, [&] { return normalize(g, h, k, terms); });
}

// ---------------------------------------------------------------- complexes

inline GCWComplex parse_complex_body(const Node& n, const Group& g) {
  if (n.has("model")) {
    const auto m = n["model"].str();
    if (m == "line_Z") return models::line_z();
    if (m == "line_Dinfty") return models::line_dinfty();
    if (m == "point") return models::point(g);
    if (m == "orbit") return models::orbit(g, parse_subgroup(n["subgroup"], g));
    if (m == "telescope") {
      std::vector<FiniteSubgroup> tower;
      for (const auto& h : n["tower"].items()) tower.push_back(parse_subgroup(h, g));
      return guarded(n["tower"], [&] { return models::telescope(g, tower); });
    }
    n["model"].error("unknown model '" + m + "'");
  }
  GCWComplex x{g, {}, n.has("name") ? n["name"].str() : "complex"};
  const auto cells = n["cells"].items();
  for (const auto& c : cells) {
    const auto dim = c["dim"].size();
    Cell cell{dim, parse_subgroup(c["stabilizer"], g), {}};
    if (c.has("boundary"))
      for (const auto& b : c["boundary"].items()) {
        const auto face = b["face"].size();
        if (face >= cells.size()) b["face"].error("no such cell");
        Element x = parse_element(b["g"], g);
        Integer coeff = b["coeff"].integer();
        cell.boundary.push_back({face, std::move(x), std::move(coeff)});
      }
    x.cells.push_back(std::move(cell));
  }
  return x;
}

/// Complex document: {"version":1, "group":G, "model":...} or explicit cells.
/// Built-in models carry their own group when "group" is absent. The result
/// is not validated; see `validate`.
inline GCWComplex parse_complex(const Node& n) {
  if (!n.has("group") && n.has("model")) {
    const auto m = n["model"].str();
    if (m == "line_Z") return models::line_z();
    if (m == "line_Dinfty") return models::line_dinfty();
  }
  return parse_complex_body(n, parse_group(n["group"]));
}

// ---------------------------------------------------------------- towers

using AnyTower = std::variant<CoefficientTower<Integer>, CoefficientTower<Rational>>;

/// Tower document: {"version":1, "group":G, "family":F, "scalar":"Z"|"Q",
/// "window":[k_min,k_max]?, "layers":[{"degree":k, ...functor body}]}.
inline AnyTower parse_tower(const Node& n) {
  const Group g = parse_group(n["group"]);
  const auto fnode = n.get("family");
  const auto fam = fnode ? parse_family(&*fnode, g) : parse_family(nullptr, g);
  const bool rational = is_rational_scalar(n);
  auto build = [&](auto tag) {
    using Scalar = decltype(tag);
    CoefficientTower<Scalar> t;
    bool first = true;
    for (const auto& l : n["layers"].items()) {
      const int k = static_cast<int>(l["degree"].int64());
      if (t.layers.count(k)) l["degree"].error("duplicate layer degree");
      auto any = parse_functor_body(l, fam);
      if constexpr (std::is_same_v<Scalar, Rational>) {
        if (auto* zi = std::get_if<IntegerMackeyFunctor>(&any)) any = rationalize(*zi);
      }
      auto* m = std::get_if<MackeyFunctor<Scalar>>(&any);
      if (!m) l.error("layer scalar does not match the tower scalar");
      t.layers.emplace(k, std::move(*m));
      t.k_min = first ? k : std::min(t.k_min, k);
      t.k_max = first ? k : std::max(t.k_max, k);
      first = false;
    }
    if (n.has("window")) {
      const auto w = n["window"].items();
      if (w.size() != 2) n["window"].error("window must be [k_min, k_max]");
      t.k_min = static_cast<int>(w[0].int64());
      t.k_max = static_cast<int>(w[1].int64());
      for (const auto& [k, m] : t.layers)
        if (k < t.k_min || k > t.k_max) n["window"].error("layer degree " + std::to_string(k) + " lies outside the window");
    }
    return t;
  };
  if (rational) return build(Rational{});
  return build(Integer{});
}

// ---------------------------------------------------------------- Laurent modules

inline LaurentPolynomial parse_laurent(const Node& n) {
  LaurentPolynomial p;
  if (n.is_string() || n.raw().is_number()) return LaurentPolynomial(n.rational());
  for (const auto& [k, v] : n.entries()) {
    std::int64_t e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(k, &used);
      if (used != k.size()) throw std::invalid_argument("");
    } catch (...) {
      v.error("exponent key must be an integer");
    }
    p += LaurentPolynomial::monomial(v.rational(), e);
  }
  return p;
}

/// {"endomorphism": [[...]]} for Q^d with t = A, or {"generators": n,
/// "presentation": [[{"exp": coeff}, ...], ...]} (rows = generators).
inline LaurentModule parse_laurent_module(const Node& n) {
  if (n.has("endomorphism")) {
    const auto a = parse_matrix<Rational>(n["endomorphism"]);
    return guarded(n["endomorphism"], [&] { return LaurentModule::from_endomorphism(a); });
  }
  const auto rows = n["presentation"].items();
  const std::size_t gens = n.has("generators") ? n["generators"].size() : rows.size();
  if (rows.size() != gens) n["presentation"].error("row count must equal the number of generators");
  const std::size_t cols = rows.empty() ? 0 : rows.front().items().size();
  LaurentMatrix p(gens, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = rows[i].items();
    if (r.size() != cols) rows[i].error("ragged presentation row");
    for (std::size_t j = 0; j < cols; ++j) p(i, j) = parse_laurent(r[j]);
  }
  return {p};
}

// ---------------------------------------------------------------- inverse systems

struct Tower {
  std::vector<FGAbelianGroup> groups;
  std::vector<IntMatrix> maps;
};

/// {"groups": [...], "maps": [...]} with maps[n] : A_{n+1} -> A_n, or
/// {"group": G, "burnside_restriction": [H_0, ..., H_N]} with H_n <= H_{n+1}
/// and A_n = A(H_n) linked by restriction.
inline Tower parse_limtower(const Node& n) {
  Tower t;
  if (n.has("burnside_restriction")) {
    const Group g = parse_group(n["group"]);
    std::vector<BurnsideRing> rings;
    const auto hs = n["burnside_restriction"].items();
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const auto h = parse_subgroup(hs[i], g);
      if (i && !rings.back().group().is_subgroup_of(h)) hs[i].error("tower is not increasing");
      rings.push_back(guarded(hs[i], [&] { return BurnsideRing(g, h); }));
    }
    for (const auto& r : rings) t.groups.push_back(FGAbelianGroup::free(r.rank()));
    for (std::size_t i = 0; i + 1 < rings.size(); ++i) t.maps.push_back(restriction_matrix(rings[i + 1], rings[i]));
    return t;
  }
  for (const auto& a : n["groups"].items()) t.groups.push_back(parse_abelian(a));
  const auto ms = n["maps"].items();
  if (ms.size() + 1 != t.groups.size()) n["maps"].error("need exactly one map per consecutive pair of groups");
  for (std::size_t i = 0; i < ms.size(); ++i)
    t.maps.push_back(
        parse_matrix<Integer>(ms[i], t.groups[i].generator_count(), t.groups[i + 1].generator_count()));
  return t;
}

// ---------------------------------------------------------------- emitters

inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(numerator(x));
  return to_string(x);
}

inline json to_json(const Element& e) { return e.code(); }

inline json to_json(const FiniteSubgroup& h) {
  json a = json::array();
  for (const auto& x : h.elements()) a.push_back(to_json(x));
  return a;
}

inline json to_json(const FGAbelianGroup& a) {
  json t = json::array();
  for (const auto& x : a.torsion) t.push_back(to_json(x));
  return {{"free", a.free_rank}, {"torsion", t}};
}

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const LaurentPolynomial& p) {
  json o = json::object();
  for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = to_json(c);
  return o;
}

}  // namespace propeq::io
