#pragma once

#include <map>
#include <memory>
#include <vector>

#include "propeq/linalg.hpp"
#include "propeq/mackey_functor.hpp"

namespace propeq {

/// A functor on the conjugation category of a finite group: a vector space
/// N(R_j) per family rep with an action of N_G(R_j) in which R_j acts
/// trivially (so really an action of the Weyl group).
struct ConjFunctor {
  std::shared_ptr<const SubgroupFamily> family;
  std::vector<std::size_t> dims;
  std::vector<std::map<Element, RatMatrix>> action;  // every element of N_G(R_j)

  const RatMatrix& act(std::size_t j, const Element& n) const {
    auto it = action.at(j).find(n);
    if (it == action.at(j).end()) fail(ErrorKind::InvalidArgument, n.str() + " does not normalize the rep");
    return it->second;
  }
};

/// Violations of: inner elements act trivially, the action is multiplicative.
inline std::vector<std::string> check_conj_functor(const ConjFunctor& n) {
  std::vector<std::string> out;
  const Group& g = n.family->ambient();
  for (std::size_t j = 0; j < n.dims.size(); ++j) {
    const auto& r = n.family->reps()[j];
    for (const auto& [x, m] : n.action[j]) {
      if (r.contains(x) && m != RatMatrix::identity(n.dims[j]))
        out.push_back("inner element " + x.str() + " acts nontrivially on N(" + r.str() + ")");
      for (const auto& [y, my] : n.action[j])
        if (n.act(j, g.multiply(x, y)) != m * my)
          out.push_back("action on N(" + r.str() + ") is not multiplicative at " + x.str() + ", " + y.str());
    }
  }
  return out;
}

namespace detail {

inline void require_finite_family(const SubgroupFamily& f) {
  if (!f.ambient().is_finite()) fail(ErrorKind::InfiniteAmbient, "rational structure theory needs a finite group");
}

}  // namespace detail

/// For each rep: the quotient of V_j by the images of all transfers from
/// proper subgroups.
inline std::vector<linalg::Quotient> tau_quotients(const RationalMackeyFunctor& m) {
  detail::require_finite_family(m.family());
  std::vector<linalg::Quotient> out;
  const auto& fam = m.family();
  for (std::size_t j = 0; j < fam.reps().size(); ++j) {
    RatMatrix sub(m.dim(j), 0);
    for (auto y : fam.subobjects(j))
      if (fam.objects()[y].subgroup != fam.reps()[j]) sub = hconcat(sub, m.stored_tr(j, y));
    out.push_back(linalg::quotient_by(sub, m.dim(j)));
  }
  return out;
}

inline ConjFunctor tau(const RationalMackeyFunctor& m) {
  const auto qs = tau_quotients(m);
  const auto& fam = m.family();
  ConjFunctor n{m.family_ptr(), {}, {}};
  for (std::size_t j = 0; j < fam.reps().size(); ++j) {
    n.dims.push_back(qs[j].projection.rows());
    std::map<Element, RatMatrix> acts;
    const auto nj = normalizer_in(fam.ambient(), whole_group(fam.ambient()), fam.reps()[j]);
    for (const auto& x : nj.elements())
      acts.emplace(x, qs[j].projection * m.act(j, x) * qs[j].section);
    n.action.push_back(std::move(acts));
  }
  return n;
}

/// The Mackey functor R(N)(H) = (sum over J <= H of N(J))^H with restriction
/// by projection, transfer by the norm map and conjugation moving summands.
class Reconstruction {
 public:
  explicit Reconstruction(ConjFunctor n) : n_(std::move(n)) {
    detail::require_finite_family(*n_.family);
    const auto& fam = *n_.family;
    const Group& g = fam.ambient();
    for (std::size_t i = 0; i < fam.reps().size(); ++i) {
      const auto& r = fam.reps()[i];
      const auto total = big_dim(r);
      RatMatrix stacked(0, total);
      std::vector<std::vector<Rational>> rows;
      for (const auto& h : generating_set(g, r)) {
        const RatMatrix d = transport(r, h) - RatMatrix::identity(total);
        for (std::size_t a = 0; a < d.rows(); ++a) rows.push_back(d.row(a));
      }
      RatMatrix b = rows.empty() ? RatMatrix::identity(total) : linalg::nullspace(RatMatrix::from_rows(rows, total));
      left_.push_back(b.cols() ? linalg::left_inverse(b) : RatMatrix(0, total));
      basis_.push_back(std::move(b));
    }
  }

  const ConjFunctor& source() const { return n_; }
  /// Columns: a basis of the invariants inside the big sum at rep i.
  const RatMatrix& basis(std::size_t i) const { return basis_.at(i); }
  const RatMatrix& left_inverse(std::size_t i) const { return left_.at(i); }

  /// Objects J <= X, in family order; these index the summands of the big sum.
  std::vector<std::size_t> summands(const FiniteSubgroup& x) const {
    std::vector<std::size_t> out;
    const auto& objs = n_.family->objects();
    for (std::size_t k = 0; k < objs.size(); ++k)
      if (objs[k].subgroup.is_subgroup_of(x)) out.push_back(k);
    return out;
  }

  std::size_t big_dim(const FiniteSubgroup& x) const {
    std::size_t d = 0;
    for (auto k : summands(x)) d += n_.dims[n_.family->objects()[k].rep];
    return d;
  }

  /// Conjugation by c from the big sum over X to the big sum over cXc^-1.
  RatMatrix transport(const FiniteSubgroup& x, const Element& c) const {
    const auto& fam = *n_.family;
    const Group& g = fam.ambient();
    const FiniteSubgroup xc = conjugate_subgroup(g, x, c);
    const auto src = summands(x), dst = summands(xc);
    std::map<std::size_t, std::size_t> dst_offset;
    std::size_t off = 0;
    for (auto k : dst) {
      dst_offset[k] = off;
      off += n_.dims[fam.objects()[k].rep];
    }
    RatMatrix t(off, big_dim(x));
    std::size_t col = 0;
    for (auto k : src) {
      const auto& oj = fam.objects()[k];
      const auto kc = fam.index_of(conjugate_subgroup(g, oj.subgroup, c));
      const auto& ojc = fam.objects()[kc];
      const Element nn = g.multiply(g.multiply(g.inverse(ojc.witness), c), oj.witness);
      t.set_block(dst_offset.at(kc), col, n_.act(oj.rep, nn));
      col += n_.dims[oj.rep];
    }
    return t;
  }

  /// Projection from the big sum over X to the big sum over Y <= X.
  RatMatrix projection(const FiniteSubgroup& x, const FiniteSubgroup& y) const {
    const auto& fam = *n_.family;
    RatMatrix p(big_dim(y), big_dim(x));
    std::size_t row = 0, col = 0;
    for (auto k : summands(x)) {
      const auto d = n_.dims[fam.objects()[k].rep];
      if (fam.objects()[k].subgroup.is_subgroup_of(y)) {
        p.set_block(row, col, RatMatrix::identity(d));
        row += d;
      }
      col += d;
    }
    return p;
  }

  /// Norm map sum over h in X/Y of h, from the big sum over Y into that over X.
  RatMatrix norm(const FiniteSubgroup& x, const FiniteSubgroup& y) const {
    const Group& g = n_.family->ambient();
    const RatMatrix inc = projection(x, y).transpose();
    RatMatrix out(big_dim(x), big_dim(y));
    for (const auto& h : left_transversal(g, x, y)) out += transport(x, h) * inc;
    return out;
  }

  RationalMackeyFunctor functor() const {
    const auto& fam = *n_.family;
    const Group& g = fam.ambient();
    const auto nreps = fam.reps().size();
    std::vector<FGAbelianGroup> values;
    for (std::size_t i = 0; i < nreps; ++i) values.push_back(FGAbelianGroup::free(basis_[i].cols()));
    std::vector<std::map<std::size_t, RatMatrix>> res(nreps), tr(nreps);
    for (std::size_t i = 0; i < nreps; ++i) {
      const auto& r = fam.reps()[i];
      for (auto y : fam.subobjects(i)) {
        const auto& obj = fam.objects()[y];
        const auto k = obj.rep;
        const RatMatrix back = transport(obj.subgroup, g.inverse(obj.witness));
        res[i].emplace(y, left_[k] * back * projection(r, obj.subgroup) * basis_[i]);
        const RatMatrix forth = transport(fam.reps()[k], obj.witness);
        tr[i].emplace(y, left_[i] * norm(r, obj.subgroup) * forth * basis_[k]);
      }
    }
    auto self = std::make_shared<const Reconstruction>(*this);
    auto act = [self](std::size_t j, const Element& x) {
      const auto& r = self->n_.family->reps()[j];
      return RatMatrix(self->left_[j] * self->transport(r, x) * self->basis_[j]);
    };
    return RationalMackeyFunctor(n_.family, values, std::move(res), std::move(tr), act, "reconstruction");
  }

  /// tau(R(N))(R_i) -> N(R_i): read off the summand J = R_i.
  RatMatrix top_component(std::size_t i) const {
    const auto& fam = *n_.family;
    const auto& r = fam.reps()[i];
    const auto d = n_.dims[i];
    RatMatrix e(d, big_dim(r));
    std::size_t col = 0;
    for (auto k : summands(r)) {
      if (fam.objects()[k].subgroup == r) e.set_block(0, col, RatMatrix::identity(d));
      col += n_.dims[fam.objects()[k].rep];
    }
    return e * basis_[i];
  }

 private:
  ConjFunctor n_;
  std::vector<RatMatrix> basis_;
  std::vector<RatMatrix> left_;
};

inline RationalMackeyFunctor reconstruct(const ConjFunctor& n) { return Reconstruction(n).functor(); }

/// Phi_i : M(R_i) -> R(tau M)(R_i), x -> (q_J res^{R_i}_J x)_J.
inline std::vector<RatMatrix> reconstruct_tau_comparison(const RationalMackeyFunctor& m) {
  const auto qs = tau_quotients(m);
  const Reconstruction rec(tau(m));
  const auto& fam = m.family();
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < fam.reps().size(); ++i) {
    const auto& r = fam.reps()[i];
    RatMatrix big(0, m.dim(i));
    std::vector<std::vector<Rational>> rows;
    for (auto k : rec.summands(r)) {
      const auto& obj = fam.objects()[k];
      const RatMatrix piece = qs[obj.rep].projection * m.res(r, obj.subgroup);
      for (std::size_t a = 0; a < piece.rows(); ++a) rows.push_back(piece.row(a));
    }
    out.push_back(rec.left_inverse(i) * RatMatrix::from_rows(rows, m.dim(i)));
  }
  return out;
}

/// Psi_i : tau(R(N))(R_i) -> N(R_i).
inline std::vector<RatMatrix> tau_reconstruct_comparison(const ConjFunctor& n) {
  const Reconstruction rec(n);
  const auto qs = tau_quotients(rec.functor());
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < n.dims.size(); ++i) out.push_back(rec.top_component(i) * qs[i].section);
  return out;
}

/// M with V_j re-coordinatized by the invertible matrices p[j] (new = p * old).
inline RationalMackeyFunctor change_basis(const RationalMackeyFunctor& m, const std::vector<RatMatrix>& p) {
  const auto& fam = m.family();
  const auto n = fam.reps().size();
  std::vector<RatMatrix> inv;
  for (const auto& x : p) {
    auto i = linalg::inverse(x);
    if (!i) fail(ErrorKind::InvalidArgument, "change of basis is not invertible");
    inv.push_back(*i);
  }
  std::vector<std::map<std::size_t, RatMatrix>> res(n), tr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto y : fam.subobjects(i)) {
      const auto k = fam.objects()[y].rep;
      res[i].emplace(y, p[k] * m.stored_res(i, y) * inv[i]);
      tr[i].emplace(y, p[i] * m.stored_tr(i, y) * inv[k]);
    }
  auto act = m.action();
  return RationalMackeyFunctor(
      m.family_ptr(), m.values(), std::move(res), std::move(tr),
      [act, p, inv](std::size_t j, const Element& x) { return RatMatrix(p[j] * act(j, x) * inv[j]); }, m.name(),
      m.action_conflicts());
}

/// tau(M)(H) as a representation of the Weyl group W_G H.
struct WeylComponent {
  FiniteSubgroup subgroup;
  WeylGroup weyl;
  std::size_t dimension = 0;
  std::vector<RatMatrix> action;  // one per transversal element of W
};

inline std::vector<WeylComponent> weyl_decompose(const RationalMackeyFunctor& m) {
  const ConjFunctor n = tau(m);
  const auto& fam = m.family();
  std::vector<WeylComponent> out;
  for (std::size_t j = 0; j < fam.reps().size(); ++j) {
    WeylComponent c{fam.reps()[j], weyl_group(fam.reps()[j], fam.ambient()), n.dims[j], {}};
    for (const auto& x : c.weyl.transversal) c.action.push_back(n.act(j, x));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace propeq
