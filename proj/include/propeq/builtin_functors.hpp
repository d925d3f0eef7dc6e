#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "propeq/burnside.hpp"
#include "propeq/mackey_functor.hpp"

namespace propeq {

/// Burnside Mackey functor: V_j = A(R_j) in the basis of subgroup classes of R_j.
inline IntegerMackeyFunctor burnside_mackey(std::shared_ptr<const SubgroupFamily> family) {
  const Group& g = family->ambient();
  std::vector<std::shared_ptr<const BurnsideRing>> rings;
  std::vector<FGAbelianGroup> values;
  for (const auto& r : family->reps()) {
    rings.push_back(std::make_shared<const BurnsideRing>(g, r));
    values.push_back(FGAbelianGroup::free(rings.back()->rank()));
  }
  const auto n = family->reps().size();
  std::vector<std::map<std::size_t, IntMatrix>> res(n), tr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto y : family->subobjects(i)) {
      const auto& obj = family->objects()[y];
      const BurnsideRing ry(g, obj.subgroup);
      const BurnsideRing& rk = *rings[obj.rep];
      res[i].emplace(y, conjugation_matrix(ry, rk, g.inverse(obj.witness)) * restriction_matrix(*rings[i], ry));
      tr[i].emplace(y, induction_matrix(ry, *rings[i]) * conjugation_matrix(rk, ry, obj.witness));
    }
  auto act = [rings](std::size_t j, const Element& x) {
    return conjugation_matrix(*rings[j], *rings[j], x);
  };
  return IntegerMackeyFunctor(family, values, std::move(res), std::move(tr), act, "burnside");
}

/// Constant Mackey functor with value A: res = id, tr^H_K = [H:K].
inline IntegerMackeyFunctor constant_mackey(const FGAbelianGroup& a, std::shared_ptr<const SubgroupFamily> family) {
  a.validate();
  const auto n = family->reps().size();
  const auto d = a.generator_count();
  const auto ords = a.orders();
  std::vector<std::map<std::size_t, IntMatrix>> res(n), tr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto y : family->subobjects(i)) {
      const auto index = family->reps()[i].order() / family->objects()[y].subgroup.order();
      IntMatrix t = Integer(index) * IntMatrix::identity(d);
      abelian::reduce(ords, t);
      res[i].emplace(y, IntMatrix::identity(d));
      tr[i].emplace(y, std::move(t));
    }
  return IntegerMackeyFunctor(
      family, std::vector<FGAbelianGroup>(n, a), std::move(res), std::move(tr),
      [d](std::size_t, const Element&) { return IntMatrix::identity(d); }, "constant:" + a.str());
}

namespace detail {

/// Linear characters of a finite abelian subgroup R as homomorphisms
/// R -> Z/|R| (value x stands for exp(2 pi i x / |R|)), listed with the
/// trivial character first and then lexicographically by value vector over
/// the sorted elements.
struct CharacterTable {
  FiniteSubgroup group;
  std::vector<std::vector<std::int64_t>> chars;  // chars[c][element index]

  std::size_t element_index(const Element& x) const {
    auto it = std::lower_bound(group.elements().begin(), group.elements().end(), x);
    return static_cast<std::size_t>(it - group.elements().begin());
  }
  std::int64_t modulus() const { return static_cast<std::int64_t>(group.order()); }

  /// Index of the character psi(y) = value(phi(y)) for y in this group, where
  /// `value` gives residues modulo `mod`.
  std::size_t find(const std::vector<std::int64_t>& values) const {
    for (std::size_t c = 0; c < chars.size(); ++c)
      if (chars[c] == values) return c;
    fail(ErrorKind::InvalidArgument, "value vector is not a character");
  }
};

inline CharacterTable character_table(const Group& g, const FiniteSubgroup& r) {
  for (const auto& a : r.elements())
    for (const auto& b : r.elements())
      if (g.multiply(a, b) != g.multiply(b, a))
        fail(ErrorKind::NonAbelianRep, "representation ring built-in needs abelian subgroups, got " + r.str());
  CharacterTable t{r, {}};
  const auto m = t.modulus();
  const auto gens = generating_set(g, r);
  // try every assignment of residues to the generators
  std::vector<std::int64_t> assign(gens.size(), 0);
  for (;;) {
    std::vector<std::optional<std::int64_t>> val(r.order());
    val[t.element_index(g.identity())] = 0;
    std::deque<Element> queue{g.identity()};
    bool ok = true;
    while (!queue.empty() && ok) {
      const Element x = queue.front();
      queue.pop_front();
      const auto vx = *val[t.element_index(x)];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const Element y = g.multiply(x, gens[k]);
        const auto vy = (vx + assign[k]) % m;
        auto& slot = val[t.element_index(y)];
        if (!slot) {
          slot = vy;
          queue.push_back(y);
        } else if (*slot != vy) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<std::int64_t> chi;
      for (auto& v : val) chi.push_back(*v);
      t.chars.push_back(std::move(chi));
    }
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == m) assign[k++] = 0;
    if (k == assign.size()) break;
  }
  std::sort(t.chars.begin(), t.chars.end());
  t.chars.erase(std::unique(t.chars.begin(), t.chars.end()), t.chars.end());
  return t;
}

/// Matrix of chi -> chi o phi from characters of `from` to characters of `to`,
/// where phi : to -> from is given elementwise.
template <class Phi>
IntMatrix character_pullback(const CharacterTable& from, const CharacterTable& to, Phi phi) {
  IntMatrix m(to.chars.size(), from.chars.size());
  const auto mf = from.modulus(), mt = to.modulus();
  for (std::size_t c = 0; c < from.chars.size(); ++c) {
    std::vector<std::int64_t> values;
    for (const auto& y : to.group.elements()) {
      const auto v = from.chars[c][from.element_index(phi(y))];
      // exp(2 pi i v / mf) = exp(2 pi i v' / mt)
      if ((v * mt) % mf != 0) fail(ErrorKind::InvalidArgument, "character value outside the target's roots of unity");
      values.push_back((v * mt) / mf);
    }
    m(to.find(values), c) = 1;
  }
  return m;
}

}  // namespace detail

/// Representation ring functor on a family of abelian subgroups: V_j = R(R_j)
/// free on the linear characters, res = restriction of characters, and
/// tr = induction, which by Frobenius reciprocity is the transpose of res.
inline IntegerMackeyFunctor rep_ring_mackey(std::shared_ptr<const SubgroupFamily> family) {
  const Group& g = family->ambient();
  std::vector<detail::CharacterTable> tables;
  std::vector<FGAbelianGroup> values;
  for (const auto& r : family->reps()) {
    tables.push_back(detail::character_table(g, r));
    values.push_back(FGAbelianGroup::free(tables.back().chars.size()));
  }
  const auto n = family->reps().size();
  std::vector<std::map<std::size_t, IntMatrix>> res(n), tr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto y : family->subobjects(i)) {
      const auto& obj = family->objects()[y];
      const auto& tk = tables[obj.rep];
      // chi on R_i  ->  (r -> chi(w r w^-1)) on R_k
      IntMatrix r = detail::character_pullback(tables[i], tk, [&](const Element& x) {
        return g.conjugate(obj.witness, x);
      });
      tr[i].emplace(y, r.transpose());
      res[i].emplace(y, std::move(r));
    }
  auto act = [tables, g](std::size_t j, const Element& x) {
    const Element xi = g.inverse(x);
    return detail::character_pullback(tables[j], tables[j], [&](const Element& y) { return g.conjugate(xi, y); });
  };
  return IntegerMackeyFunctor(family, values, std::move(res), std::move(tr), act, "repring");
}

inline bool is_abelian_subgroup(const Group& g, const FiniteSubgroup& h) {
  for (const auto& a : h.elements())
    for (const auto& b : h.elements())
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  return true;
}

/// Family of all abelian subgroup classes of a finite group.
inline std::shared_ptr<const SubgroupFamily> abelian_family(const Group& g) {
  return std::make_shared<const SubgroupFamily>(
      SubgroupFamily::filtered(g, [&](const FiniteSubgroup& h) { return is_abelian_subgroup(g, h); }));
}

inline std::shared_ptr<const SubgroupFamily> full_family(const Group& g) {
  return std::make_shared<const SubgroupFamily>(SubgroupFamily::all(g));
}

/// Built-in by name: "burnside", "constant:Z", "constant:Q" (rationalized
/// later), "constant:Z/n", "repring".
inline IntegerMackeyFunctor builtin_functor(const std::string& name, std::shared_ptr<const SubgroupFamily> family) {
  if (name == "burnside") return burnside_mackey(std::move(family));
  if (name == "repring") return rep_ring_mackey(std::move(family));
  if (name == "constant:Z" || name == "constant:Q") return constant_mackey(FGAbelianGroup::free(1), std::move(family));
  if (name.rfind("constant:Z/", 0) == 0) {
    const Integer d(name.substr(11).c_str());
    return constant_mackey(FGAbelianGroup{0, {d}}, std::move(family));
  }
  fail(ErrorKind::InvalidArgument, "unknown built-in functor '" + name + "'");
}

}  // namespace propeq
