#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "propeq/abelian.hpp"
#include "propeq/span.hpp"

namespace propeq {

/// A subgroup Y of the family together with its identification Y = w R_rep w^-1.
struct FamilyObject {
  FiniteSubgroup subgroup;
  std::size_t rep = 0;
  Element witness;
};

/// Y = witness * reps[rep] * witness^-1, supplied for infinite ambient groups.
struct DeclaredWitness {
  FiniteSubgroup subgroup;
  std::size_t rep = 0;
  Element witness;
};

/// A finite list of conjugacy-class representatives closed under
/// subconjugacy. For finite G the objects are all conjugates of subgroups of
/// the reps and witnesses are found by search (least conjugator). For infinite
/// G the objects are the subgroups of the reps plus any declared subgroups;
/// each needs a literal rep match or a declared witness.
class SubgroupFamily {
 public:
  SubgroupFamily(Group ambient, std::vector<FiniteSubgroup> reps, std::vector<DeclaredWitness> declared = {})
      : ambient_(std::move(ambient)), reps_(std::move(reps)) {
    for (const auto& r : reps_) {
      for (const auto& x : r.elements()) ambient_.require(x);
      if (!is_subgroup(ambient_, r)) fail(ErrorKind::NotASubgroup, "family rep " + r.str() + " is not a subgroup");
    }
    std::set<FiniteSubgroup> subs;
    for (const auto& r : reps_)
      for (auto& y : all_subgroups(ambient_, r)) subs.insert(std::move(y));
    if (ambient_.is_finite()) {
      for (std::size_t i = 0; i < reps_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (are_conjugate_in(ambient_, whole_group(ambient_), reps_[i], reps_[j]))
            fail(ErrorKind::InvalidArgument, "family reps " + reps_[j].str() + " and " + reps_[i].str() + " are conjugate");
      std::set<FiniteSubgroup> all;
      for (const auto& y : subs)
        for (const auto& x : ambient_.elements()) all.insert(conjugate_subgroup(ambient_, y, x));
      for (const auto& y : all) objects_.push_back(identify_finite(y));
    } else {
      for (const auto& d : declared) {
        if (d.rep >= reps_.size()) fail(ErrorKind::InvalidArgument, "declared witness names a missing rep");
        ambient_.require(d.witness);
        if (conjugate_subgroup(ambient_, reps_[d.rep], d.witness) != d.subgroup)
          fail(ErrorKind::InvalidArgument, "declared witness does not conjugate the rep onto " + d.subgroup.str());
        subs.insert(d.subgroup);
      }
      for (const auto& y : subs) {
        std::optional<FamilyObject> obj;
        for (std::size_t j = 0; j < reps_.size() && !obj; ++j)
          if (reps_[j] == y) obj = FamilyObject{y, j, ambient_.identity()};
        for (const auto& d : declared)
          if (!obj && d.subgroup == y) obj = FamilyObject{y, d.rep, d.witness};
        if (!obj) fail(ErrorKind::MissingWitness, "no rep or witness identifies the subgroup " + y.str());
        objects_.push_back(std::move(*obj));
      }
    }
    for (std::size_t k = 0; k < objects_.size(); ++k) index_.emplace(objects_[k].subgroup, k);
    subobjects_.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      for (std::size_t k = 0; k < objects_.size(); ++k)
        if (objects_[k].subgroup.is_subgroup_of(reps_[i])) subobjects_[i].push_back(k);
  }

  /// Every subgroup class of a finite group.
  static SubgroupFamily all(const Group& g) { return SubgroupFamily(g, subgroup_conjugacy_classes(g)); }

  /// Subgroup classes of a finite group satisfying a predicate closed under
  /// passing to subgroups and conjugates (e.g. abelian).
  template <class Pred>
  static SubgroupFamily filtered(const Group& g, Pred keep) {
    std::vector<FiniteSubgroup> reps;
    for (auto& h : subgroup_conjugacy_classes(g))
      if (keep(h)) reps.push_back(std::move(h));
    return SubgroupFamily(g, std::move(reps));
  }

  const Group& ambient() const { return ambient_; }
  const std::vector<FiniteSubgroup>& reps() const { return reps_; }
  const std::vector<FamilyObject>& objects() const { return objects_; }
  const std::vector<std::size_t>& subobjects(std::size_t rep) const { return subobjects_.at(rep); }

  std::optional<std::size_t> find(const FiniteSubgroup& y) const {
    auto it = index_.find(y);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const FiniteSubgroup& y) const {
    auto k = find(y);
    if (!k) fail(ErrorKind::OutsideFamily, "subgroup " + y.str() + " is not in the family");
    return *k;
  }
  const FamilyObject& locate(const FiniteSubgroup& y) const { return objects_[index_of(y)]; }

  /// Index of the rep equal to y, if any.
  std::optional<std::size_t> rep_index(const FiniteSubgroup& y) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (reps_[j] == y) return j;
    return std::nullopt;
  }

 private:
  FamilyObject identify_finite(const FiniteSubgroup& y) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (reps_[j] == y) return {y, j, ambient_.identity()};
    for (std::size_t j = 0; j < reps_.size(); ++j) {
      if (reps_[j].order() != y.order()) continue;
      for (const auto& x : ambient_.elements())
        if (conjugate_subgroup(ambient_, reps_[j], x) == y) return {y, j, x};
    }
    fail(ErrorKind::OutsideFamily, "family is not closed: " + y.str() + " is conjugate to no rep");
  }

  Group ambient_;
  std::vector<FiniteSubgroup> reps_;
  std::vector<FamilyObject> objects_;
  std::map<FiniteSubgroup, std::size_t> index_;
  std::vector<std::vector<std::size_t>> subobjects_;
};

template <class Scalar>
bool same_map(const std::vector<Integer>& target_orders, const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if constexpr (std::is_same_v<Scalar, Integer>)
    return abelian::maps_equal(target_orders, a, b);
  else
    return a == b;
}

/// A Mackey functor on a subgroup family, stored in rep coordinates: the value
/// at an object Y = w R_k w^-1 is identified with V_k through c_w.
///
///   stored_res(i, Y) = c_w^-1 o res^{R_i}_Y : V_i -> V_k
///   stored_tr(i, Y)  = tr^{R_i}_Y o c_w    : V_k -> V_i
///   act(j, n)        = c_n on V_j for n normalizing R_j
///
/// Every other structure map is assembled from these.
template <class Scalar>
class MackeyFunctor {
 public:
  using scalar_type = Scalar;
  using Mat = Matrix<Scalar>;
  using Action = std::function<Mat(std::size_t, const Element&)>;

  MackeyFunctor(std::shared_ptr<const SubgroupFamily> family, std::vector<FGAbelianGroup> values,
                std::vector<std::map<std::size_t, Mat>> res, std::vector<std::map<std::size_t, Mat>> tr, Action act,
                std::string name = "", std::vector<std::string> action_conflicts = {})
      : family_(std::move(family)),
        values_(std::move(values)),
        res_(std::move(res)),
        tr_(std::move(tr)),
        act_(std::move(act)),
        name_(std::move(name)),
        action_conflicts_(std::move(action_conflicts)) {
    const auto n = family_->reps().size();
    if (values_.size() != n || res_.size() != n || tr_.size() != n)
      fail(ErrorKind::InvalidArgument, "Mackey functor data does not match the number of family reps");
    for (const auto& v : values_) {
      v.validate();
      if constexpr (std::is_same_v<Scalar, Rational>)
        if (!v.torsion.empty()) fail(ErrorKind::NotRational, "rational Mackey functor with torsion value");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (auto y : family_->subobjects(i)) {
        const auto k = family_->objects()[y].rep;
        auto r = res_[i].find(y);
        auto t = tr_[i].find(y);
        const auto where = family_->reps()[i].str() + " -> " + family_->objects()[y].subgroup.str();
        if (r == res_[i].end() || t == tr_[i].end())
          fail(ErrorKind::InvalidArgument, "missing restriction or transfer for " + where);
        if (r->second.rows() != dim(k) || r->second.cols() != dim(i))
          fail(ErrorKind::InvalidArgument, "restriction matrix has the wrong shape at " + where);
        if (t->second.rows() != dim(i) || t->second.cols() != dim(k))
          fail(ErrorKind::InvalidArgument, "transfer matrix has the wrong shape at " + where);
      }
  }

  const SubgroupFamily& family() const { return *family_; }
  std::shared_ptr<const SubgroupFamily> family_ptr() const { return family_; }
  const Group& ambient() const { return family_->ambient(); }
  const std::string& name() const { return name_; }
  const FGAbelianGroup& value(std::size_t j) const { return values_.at(j); }
  const std::vector<FGAbelianGroup>& values() const { return values_; }
  std::vector<Integer> orders(std::size_t j) const { return values_.at(j).orders(); }
  std::size_t dim(std::size_t j) const { return values_.at(j).generator_count(); }
  const std::vector<std::string>& action_conflicts() const { return action_conflicts_; }

  const Mat& stored_res(std::size_t i, std::size_t obj) const { return res_.at(i).at(obj); }
  const Mat& stored_tr(std::size_t i, std::size_t obj) const { return tr_.at(i).at(obj); }
  Mat act(std::size_t j, const Element& n) const { return act_(j, n); }
  const Action& action() const { return act_; }
  const std::vector<std::map<std::size_t, Mat>>& stored_res_all() const { return res_; }
  const std::vector<std::map<std::size_t, Mat>>& stored_tr_all() const { return tr_; }

  Mat reduce(std::size_t j, Mat m) const {
    if constexpr (std::is_same_v<Scalar, Integer>) abelian::reduce(orders(j), m);
    return m;
  }

  /// tr^K_L o c_gamma o res^H_{gamma^-1 L gamma} : M(H) -> M(K) in rep coordinates.
  Mat span_map(const FiniteSubgroup& h, const FiniteSubgroup& k, const FiniteSubgroup& l, const Element& gamma) const {
    const Group& g = ambient();
    const FamilyObject& oh = family_->locate(h);
    const FamilyObject& ok = family_->locate(k);
    if (!l.is_subgroup_of(k)) fail(ErrorKind::NotASubgroup, "span middle is not contained in the target");
    const FiniteSubgroup l1 = conjugate_subgroup_right(g, l, ok.witness);
    const Element c = g.multiply(g.multiply(g.inverse(ok.witness), gamma), oh.witness);
    const FiniteSubgroup l2 = conjugate_subgroup_right(g, l1, c);
    if (!l2.is_subgroup_of(family_->reps()[oh.rep]))
      fail(ErrorKind::NotASubgroup, "gamma^-1 L gamma is not contained in the source");
    const auto i1 = family_->index_of(l1);
    const auto i2 = family_->index_of(l2);
    const FamilyObject& o1 = family_->objects()[i1];
    const FamilyObject& o2 = family_->objects()[i2];
    if (o1.rep != o2.rep) fail(ErrorKind::InvalidArgument, "family identifies conjugate subgroups with different reps");
    const Element n = g.multiply(g.multiply(g.inverse(o1.witness), c), o2.witness);
    return reduce(ok.rep, stored_tr(ok.rep, i1) * act(o1.rep, n) * stored_res(oh.rep, i2));
  }

  Mat span_map(const TransitiveSpan& s) const { return span_map(s.source, s.target, s.mid, s.gamma); }

  /// res^X_Y : M(X) -> M(Y)
  Mat res(const FiniteSubgroup& x, const FiniteSubgroup& y) const { return span_map(x, y, y, ambient().identity()); }
  /// tr^X_Y : M(Y) -> M(X)
  Mat tr(const FiniteSubgroup& x, const FiniteSubgroup& y) const { return span_map(y, x, y, ambient().identity()); }
  /// c_g : M(X) -> M(gXg^-1)
  Mat conj(const FiniteSubgroup& x, const Element& g) const {
    return span_map(x, conjugate_subgroup(ambient(), x, g), conjugate_subgroup(ambient(), x, g), g);
  }

  const FGAbelianGroup& value_at(const FiniteSubgroup& x) const { return value(family_->locate(x).rep); }
  std::vector<Integer> orders_at(const FiniteSubgroup& x) const { return orders(family_->locate(x).rep); }

  /// The homomorphism M(H) -> M(K) of an element of A_G(H, K).
  Mat evaluate(const MackeyHomElement& f) const {
    const auto hs = family_->locate(f.source).rep;
    const auto ks = family_->locate(f.target).rep;
    Mat out(dim(ks), dim(hs));
    for (const auto& [s, c] : f.terms) out += Scalar(c) * span_map(s);
    return reduce(ks, out);
  }

  /// Copy with one stored matrix entry shifted by delta.
  MackeyFunctor perturbed(bool transfer, std::size_t rep, std::size_t obj, std::size_t r, std::size_t c,
                          const Scalar& delta) const {
    MackeyFunctor out = *this;
    auto& m = transfer ? out.tr_.at(rep).at(obj) : out.res_.at(rep).at(obj);
    m(r, c) += delta;
    return out;
  }

  /// Copy with one stored matrix replaced.
  MackeyFunctor with_stored(bool transfer, std::size_t rep, std::size_t obj, Mat m) const {
    MackeyFunctor out = *this;
    (transfer ? out.tr_ : out.res_).at(rep).at(obj) = std::move(m);
    return out;
  }

 private:
  std::shared_ptr<const SubgroupFamily> family_;
  std::vector<FGAbelianGroup> values_;
  std::vector<std::map<std::size_t, Mat>> res_;
  std::vector<std::map<std::size_t, Mat>> tr_;
  Action act_;
  std::string name_;
  std::vector<std::string> action_conflicts_;
};

using IntegerMackeyFunctor = MackeyFunctor<Integer>;
using RationalMackeyFunctor = MackeyFunctor<Rational>;

namespace detail {

/// Normal-form word of an element of a free-abelian or semidirect group in
/// the ambient generators: pairs (generator index, exponent).
inline std::vector<std::pair<std::size_t, std::int64_t>> ambient_word(const Group& g, const Element& x) {
  std::vector<std::pair<std::size_t, std::int64_t>> word;
  const std::size_t n = g.degree();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) word.emplace_back(i, x[i]);
  if (g.kind() == GroupKind::Semidirect) {
    // finite part by breadth-first search over its generators
    const Group& f = g.finite_part();
    const Element target = f.elements()[static_cast<std::size_t>(x[n])];
    std::map<Element, std::vector<std::size_t>> path{{f.identity(), {}}};
    std::deque<Element> queue{f.identity()};
    while (!queue.empty() && !path.count(target)) {
      const Element y = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < f.generators().size(); ++k) {
        const Element z = f.multiply(y, f.generators()[k]);
        if (path.count(z)) continue;
        auto p = path[y];
        p.push_back(k);
        path[z] = p;
        queue.push_back(z);
      }
    }
    for (auto k : path.at(target)) word.emplace_back(n + k, 1);
  }
  return word;
}

template <class Scalar>
Matrix<Scalar> invert_action(const Matrix<Scalar>& m) {
  auto inv = linalg::inverse(matrix_cast<Rational>(m));
  if (!inv) fail(ErrorKind::InvalidArgument, "action matrix is not invertible");
  if constexpr (std::is_same_v<Scalar, Integer>) {
    for (std::size_t i = 0; i < inv->rows(); ++i)
      for (std::size_t j = 0; j < inv->cols(); ++j)
        if (!is_integral((*inv)(i, j))) fail(ErrorKind::InvalidArgument, "action matrix is not unimodular");
    return matrix_cast<Integer>(*inv);
  } else {
    return *inv;
  }
}

}  // namespace detail

/// Normalizer action given by matrices on generators. Over a finite group the
/// action is closed up by breadth-first search, and two words reaching the same
/// element with different matrices are recorded as conflicts. Over an
/// infinite group, a rep whose generator list names every ambient generator is
/// evaluated on normal-form words; otherwise the search runs up to a cap.
/// A rep with no generators gets the trivial action.
template <class Scalar>
struct GeneratorAction {
  using Mat = Matrix<Scalar>;

  GeneratorAction(const SubgroupFamily& family, const std::vector<FGAbelianGroup>& values,
                  std::vector<std::vector<std::pair<Element, Mat>>> gens, std::size_t cap = 4096)
      : ambient(family.ambient()), dims(values.size()), generators(std::move(gens)) {
    const auto n = family.reps().size();
    if (generators.size() != n) fail(ErrorKind::InvalidArgument, "need an action list per rep");
    closure.resize(n);
    word_mode.assign(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      dims[j] = values[j].generator_count();
      const auto& r = family.reps()[j];
      for (const auto& [x, m] : generators[j]) {
        ambient.require(x);
        if (conjugate_subgroup(ambient, r, x) != r)
          fail(ErrorKind::InvalidArgument, "action element " + x.str() + " does not normalize " + r.str());
        if (m.rows() != dims[j] || m.cols() != dims[j])
          fail(ErrorKind::InvalidArgument, "action matrix has the wrong shape at rep " + r.str());
      }
      if (generators[j].empty()) continue;
      if (!ambient.is_finite()) {
        bool all = true;
        for (const auto& s : ambient.generators()) {
          bool found = false;
          for (const auto& [x, m] : generators[j]) found = found || x == s;
          all = all && found;
        }
        if (all) {
          word_mode[j] = true;
          continue;
        }
      }
      const auto ords = values[j].orders();
      closure[j].emplace(ambient.identity(), Mat::identity(dims[j]));
      std::deque<Element> queue{ambient.identity()};
      while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (const auto& [s, m] : generators[j]) {
          const Element y = ambient.multiply(x, s);
          Mat my = closure[j].at(x) * m;
          if constexpr (std::is_same_v<Scalar, Integer>) abelian::reduce(ords, my);
          auto it = closure[j].find(y);
          if (it == closure[j].end()) {
            if (closure[j].size() >= cap) continue;
            closure[j].emplace(y, my);
            queue.push_back(y);
          } else if (!same_map<Scalar>(ords, it->second, my)) {
            conflicts.push_back("action on M(" + r.str() + ") is not a homomorphism: two words for " + y.str() +
                                " give " + it->second.str() + " and " + my.str());
          }
        }
      }
    }
  }

  Mat operator()(std::size_t j, const Element& x) const {
    if (generators.at(j).empty()) return Mat::identity(dims[j]);
    if (word_mode[j]) {
      Mat out = Mat::identity(dims[j]);
      for (const auto& [gi, e] : detail::ambient_word(ambient, x)) {
        const Element& s = ambient.generators()[gi];
        Mat m;
        for (const auto& [y, my] : generators[j])
          if (y == s) m = my;
        if (e < 0) m = detail::invert_action(m);
        for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out = out * m;
      }
      return out;
    }
    auto it = closure[j].find(x);
    if (it == closure[j].end())
      fail(ErrorKind::MissingWitness, "no action matrix reaches the element " + x.str());
    return it->second;
  }

  Group ambient;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::pair<Element, Mat>>> generators;
  std::vector<std::map<Element, Mat>> closure;
  std::vector<bool> word_mode;
  std::vector<std::string> conflicts;
};

/// A Mackey functor given entirely by matrices. res and tr are keyed by rep
/// index and the subgroup of the rep.
template <class Scalar>
MackeyFunctor<Scalar> functor_from_data(std::shared_ptr<const SubgroupFamily> family, std::vector<FGAbelianGroup> values,
                                        const std::vector<std::map<FiniteSubgroup, Matrix<Scalar>>>& res,
                                        const std::vector<std::map<FiniteSubgroup, Matrix<Scalar>>>& tr,
                                        std::vector<std::vector<std::pair<Element, Matrix<Scalar>>>> action,
                                        std::string name = "") {
  auto key = [&](const std::vector<std::map<FiniteSubgroup, Matrix<Scalar>>>& in) {
    std::vector<std::map<std::size_t, Matrix<Scalar>>> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i)
      for (const auto& [y, m] : in[i]) out[i].emplace(family->index_of(y), m);
    return out;
  };
  auto acts = std::make_shared<GeneratorAction<Scalar>>(*family, values, std::move(action));
  auto conflicts = acts->conflicts;
  return MackeyFunctor<Scalar>(
      family, std::move(values), key(res), key(tr),
      [acts](std::size_t j, const Element& x) { return (*acts)(j, x); }, std::move(name), std::move(conflicts));
}

/// Tensor with Q: keep the free block of every value.
inline RationalMackeyFunctor rationalize(const IntegerMackeyFunctor& m) {
  const auto n = m.family().reps().size();
  std::vector<FGAbelianGroup> values;
  std::vector<std::size_t> offset;
  for (std::size_t j = 0; j < n; ++j) {
    values.push_back(FGAbelianGroup::free(m.value(j).free_rank));
    offset.push_back(m.value(j).torsion.size());
  }
  auto block = [offset, values](const IntMatrix& a, std::size_t row_rep, std::size_t col_rep) {
    return matrix_cast<Rational>(a.block(offset[row_rep], offset[col_rep], values[row_rep].free_rank,
                                         values[col_rep].free_rank));
  };
  std::vector<std::map<std::size_t, RatMatrix>> res(n), tr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto y : m.family().subobjects(i)) {
      const auto k = m.family().objects()[y].rep;
      res[i].emplace(y, block(m.stored_res(i, y), k, i));
      tr[i].emplace(y, block(m.stored_tr(i, y), i, k));
    }
  auto act = m.action();
  return RationalMackeyFunctor(
      m.family_ptr(), values, std::move(res), std::move(tr),
      [act, block](std::size_t j, const Element& x) { return block(act(j, x), j, j); }, m.name() + " (x) Q",
      m.action_conflicts());
}

/// pi_0^K(Sigma^inf_+ G/H): free abelian of rank A_G(H, K).
inline FGAbelianGroup pi0_suspension_orbit(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k,
                                           const std::optional<std::vector<Element>>& witnesses = std::nullopt) {
  return FGAbelianGroup::free(hom_rank(g, h, k, witnesses));
}

}  // namespace propeq
