#pragma once

#include <string>
#include <vector>

#include "propeq/mackey_functor.hpp"

namespace propeq {

struct AxiomViolation {
  std::string axiom;
  std::string location;
  std::string detail;

  std::string str() const { return axiom + " at " + location + ": " + detail; }
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

/// Elements used for conjugation checks at a rep: the whole normalizer for
/// finite G, otherwise the rep itself plus ambient generators (and inverses)
/// that normalize it.
inline std::vector<Element> normalizer_sample(const Group& g, const FiniteSubgroup& r) {
  if (g.is_finite()) return normalizer_in(g, whole_group(g), r).elements();
  std::set<Element> out(r.elements().begin(), r.elements().end());
  for (const auto& s : g.generators())
    for (const auto& x : {s, g.inverse(s)})
      if (conjugate_subgroup(g, r, x) == r) out.insert(x);
  return {out.begin(), out.end()};
}

}  // namespace detail

/// Verifies the Mackey functor identities on every rep R and subgroups
/// Z <= Y <= R of the family:
///   res^R_R = tr^R_R = id, transitivity of res and tr,
///   conjugation commutes with res and tr, inner automorphisms act trivially,
///   conjugation is multiplicative,
///   res^R_Y tr^R_Z = sum over Y g Z of tr^Y_{Y n gZg^-1} c_g res^Z_{g^-1 Y g n Z}.
/// Integer maps are compared modulo the target relations.
template <class Scalar>
AxiomReport check_axioms(const MackeyFunctor<Scalar>& m) {
  using Mat = Matrix<Scalar>;
  AxiomReport report;
  const Group& g = m.ambient();
  const SubgroupFamily& fam = m.family();
  auto add = [&](std::string axiom, std::string where, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(where), std::move(detail)});
  };
  auto expect = [&](const char* axiom, const std::string& where, const FiniteSubgroup& target, const Mat& lhs,
                    const Mat& rhs) {
    if (!same_map<Scalar>(m.orders_at(target), lhs, rhs))
      add(axiom, where, "expected " + m.reduce(fam.locate(target).rep, rhs).str() + ", found " +
                            m.reduce(fam.locate(target).rep, lhs).str());
  };

  for (const auto& c : m.action_conflicts()) add("conjugation homomorphism", "action table", c);

  for (std::size_t i = 0; i < fam.reps().size(); ++i) {
    const FiniteSubgroup& r = fam.reps()[i];
    const std::string rs = r.str();
    if constexpr (std::is_same_v<Scalar, Integer>) {
      for (auto y : fam.subobjects(i)) {
        const auto k = fam.objects()[y].rep;
        const auto& ysub = fam.objects()[y].subgroup;
        if (!abelian::is_well_defined(m.orders(i), m.orders(k), m.stored_res(i, y)))
          add("well-defined", "res " + rs + " -> " + ysub.str(), "matrix does not respect the relations");
        if (!abelian::is_well_defined(m.orders(k), m.orders(i), m.stored_tr(i, y)))
          add("well-defined", "tr " + rs + " <- " + ysub.str(), "matrix does not respect the relations");
      }
    }
    const Mat id = Mat::identity(m.dim(i));
    expect("identity", "res " + rs + " -> " + rs, r, m.res(r, r), id);
    expect("identity", "tr " + rs + " <- " + rs, r, m.tr(r, r), id);

    std::vector<FiniteSubgroup> subs;
    for (auto y : fam.subobjects(i)) subs.push_back(fam.objects()[y].subgroup);

    for (const auto& y : subs)
      for (const auto& z : subs) {
        if (!z.is_subgroup_of(y)) continue;
        const std::string where = rs + " >= " + y.str() + " >= " + z.str();
        expect("transitivity of restriction", where, z, m.res(y, z) * m.res(r, y), m.res(r, z));
        expect("transitivity of transfer", where, r, m.tr(r, y) * m.tr(y, z), m.tr(r, z));
      }

    const auto sample = detail::normalizer_sample(g, r);
    for (const auto& n : sample) {
      const std::string ns = n.str();
      if (r.contains(n)) expect("inner automorphisms act trivially", "c_" + ns + " on " + rs, r, m.conj(r, n), id);
      for (const auto& y : subs) {
        const FiniteSubgroup ny = conjugate_subgroup(g, y, n);
        const std::string where = "c_" + ns + ", " + rs + " >= " + y.str();
        expect("conjugation commutes with restriction", where, ny, m.conj(y, n) * m.res(r, y),
               m.res(r, ny) * m.conj(r, n));
        expect("conjugation commutes with transfer", where, r, m.tr(r, ny) * m.conj(y, n),
               m.conj(r, n) * m.tr(r, y));
      }
      for (const auto& n2 : sample)
        expect("conjugation homomorphism", "c_" + ns + " c_" + n2.str() + " on " + rs, r,
               m.conj(r, n) * m.conj(r, n2), m.conj(r, g.multiply(n, n2)));
    }

    for (const auto& y : subs)
      for (const auto& z : subs) {
        Mat rhs(m.dim(fam.locate(y).rep), m.dim(fam.locate(z).rep));
        for (const auto& x : double_cosets_in(g, r, y, z))
          rhs += m.span_map(z, y, intersect(y, conjugate_subgroup(g, z, x)), x);
        expect("double coset formula", "res^" + rs + "_" + y.str() + " tr^" + rs + "_" + z.str(), y,
               m.res(r, y) * m.tr(r, z), rhs);
      }
  }
  return report;
}

}  // namespace propeq
