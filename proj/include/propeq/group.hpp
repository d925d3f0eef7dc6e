#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "propeq/error.hpp"

namespace propeq {

/// One group element, stored as its canonical encoding:
///  - permutation: the image list (0-based),
///  - finite table: a single index,
///  - free abelian: the coordinate vector,
///  - semidirect Z^n x| F: the vector followed by the index of the finite part.
/// Equality and ordering are those of the encoding.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> code) : code_(std::move(code)) {}

  const std::vector<std::int64_t>& code() const { return code_; }
  std::size_t size() const { return code_.size(); }
  std::int64_t operator[](std::size_t i) const { return code_[i]; }

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(code_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<std::int64_t> code_;
};

enum class GroupKind { Permutation, Table, FreeAbelian, Semidirect };

inline std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Permutation: return "permutation";
    case GroupKind::Table: return "table";
    case GroupKind::FreeAbelian: return "free-abelian";
    case GroupKind::Semidirect: return "semidirect";
  }
  return "?";
}

/// An ambient discrete group with exact multiplication. Finite kinds expose the
/// full sorted element list. Products compose right to left for permutations:
/// (a*b)(i) = a(b(i)).
class Group {
 public:
  static Group permutation(std::size_t degree, std::vector<Element> generators, std::string name = "");
  static Group table(std::vector<std::vector<std::size_t>> table, std::string name = "");
  static Group free_abelian(std::size_t rank, std::string name = "");
  /// Z^rank x| F where F is finite and `action[i]` is the integer matrix by
  /// which F's i-th generator acts on Z^rank.
  static Group semidirect(std::size_t rank, Group finite_part,
                          std::vector<std::vector<std::vector<std::int64_t>>> action, std::string name = "");

  GroupKind kind() const { return impl_->kind; }
  const std::string& name() const { return impl_->name; }
  const std::vector<Element>& generators() const { return impl_->generators; }
  bool is_finite() const { return impl_->kind == GroupKind::Permutation || impl_->kind == GroupKind::Table; }

  /// Degree (permutation), order (table) or lattice rank (free abelian, semidirect).
  std::size_t degree() const { return impl_->degree; }
  const Group& finite_part() const { return *impl_->finite; }
  const std::vector<std::vector<std::int64_t>>& table_data() const { return impl_->table_rows; }

  Element identity() const { return impl_->identity; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element conjugate(const Element& g, const Element& x) const { return multiply(multiply(g, x), inverse(g)); }
  Element power(const Element& a, std::int64_t k) const;

  /// Valid encoding for this group.
  bool contains(const Element& a) const;
  void require(const Element& a) const {
    if (!contains(a)) fail(ErrorKind::ForeignElement, "element " + a.str() + " is not in group " + name());
  }

  const std::vector<Element>& elements() const {
    if (!is_finite()) fail(ErrorKind::InfiniteAmbient, "group " + name() + " is infinite");
    return impl_->elements;
  }
  std::size_t order() const { return elements().size(); }

  /// Matrix of the finite-part element with index `f` (semidirect only).
  const std::vector<std::vector<std::int64_t>>& action_matrix(std::size_t f) const { return impl_->action[f]; }

  bool same_as(const Group& o) const { return impl_ == o.impl_; }
  /// Same presentation: kind, degree, generators and (for finite kinds and the
  /// finite part of a semidirect product) the same multiplication.
  bool equivalent(const Group& o) const {
    if (same_as(o)) return true;
    if (kind() != o.kind() || degree() != o.degree() || generators() != o.generators()) return false;
    switch (kind()) {
      case GroupKind::Permutation: return true;
      case GroupKind::Table: return table_data() == o.table_data();
      case GroupKind::FreeAbelian: return true;
      case GroupKind::Semidirect: return finite_part().equivalent(o.finite_part()) && impl_->action == o.impl_->action;
    }
    return false;
  }

 private:
  struct Impl {
    GroupKind kind{};
    std::string name;
    std::size_t degree = 0;
    std::vector<Element> generators;
    Element identity;
    std::vector<Element> elements;  // finite kinds, sorted
    std::vector<std::vector<std::int64_t>> table_rows;
    std::shared_ptr<const Group> finite;
    std::vector<std::vector<std::vector<std::int64_t>>> action;  // per finite-part element index
    std::vector<std::size_t> finite_inverse;
    std::vector<std::vector<std::size_t>> finite_product;
  };
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::vector<Element> enumerate(const Group& g);

  std::shared_ptr<const Impl> impl_;
};

namespace detail {

using IntRows = std::vector<std::vector<std::int64_t>>;

inline IntRows mat_mul(const IntRows& a, const IntRows& b) {
  const std::size_t n = a.size();
  IntRows c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntRows mat_identity(std::size_t n) {
  IntRows c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  return c;
}

inline std::size_t index_of(const std::vector<Element>& sorted, const Element& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || *it != e) fail(ErrorKind::ForeignElement, "element " + e.str() + " not found");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace detail

inline std::vector<Element> Group::enumerate(const Group& g) {
  std::set<Element> seen{g.identity()};
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Element y = g.multiply(x, s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline Group Group::permutation(std::size_t degree, std::vector<Element> generators, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Permutation;
  impl->name = name.empty() ? "perm(" + std::to_string(degree) + ")" : std::move(name);
  impl->degree = degree;
  std::vector<std::int64_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::int64_t>(i);
  impl->identity = Element(id);
  for (const auto& g : generators) {
    std::vector<bool> hit(degree, false);
    if (g.size() != degree) fail(ErrorKind::ForeignElement, "permutation " + g.str() + " has the wrong degree");
    for (auto x : g.code()) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || hit[static_cast<std::size_t>(x)])
        fail(ErrorKind::ForeignElement, "image list " + g.str() + " is not a permutation");
      hit[static_cast<std::size_t>(x)] = true;
    }
  }
  impl->generators = std::move(generators);
  Group g(impl);
  impl->elements = enumerate(g);
  return g;
}

inline Group Group::table(std::vector<std::vector<std::size_t>> rows, std::string name) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty multiplication table");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Table;
  impl->name = name.empty() ? "table(" + std::to_string(n) + ")" : std::move(name);
  impl->degree = n;
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::InvalidArgument, "multiplication table is not square");
    for (auto x : r)
      if (x >= n) fail(ErrorKind::InvalidArgument, "multiplication table entry out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < n && !e; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = rows[i][j] == j && rows[j][i] == j;
    if (ok) e = i;
  }
  if (!e) fail(ErrorKind::InvalidArgument, "multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) has_inverse |= rows[a][b] == *e;
    if (!has_inverse) fail(ErrorKind::InvalidArgument, "multiplication table element without inverse");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          fail(ErrorKind::InvalidArgument, "multiplication table is not associative");
  }
  impl->identity = Element({static_cast<std::int64_t>(*e)});
  for (std::size_t i = 0; i < n; ++i) {
    impl->elements.emplace_back(std::vector<std::int64_t>{static_cast<std::int64_t>(i)});
    impl->table_rows.emplace_back(rows[i].begin(), rows[i].end());
  }
  impl->generators = impl->elements;
  return Group(impl);
}

inline Group Group::free_abelian(std::size_t rank, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::FreeAbelian;
  impl->name = name.empty() ? "Z^" + std::to_string(rank) : std::move(name);
  impl->degree = rank;
  impl->identity = Element(std::vector<std::int64_t>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::int64_t> v(rank, 0);
    v[i] = 1;
    impl->generators.emplace_back(v);
  }
  return Group(impl);
}

inline Group Group::semidirect(std::size_t rank, Group finite_part, std::vector<detail::IntRows> action,
                               std::string name) {
  if (!finite_part.is_finite()) fail(ErrorKind::InvalidArgument, "semidirect finite part must be finite");
  if (action.size() != finite_part.generators().size())
    fail(ErrorKind::InvalidArgument, "need one action matrix per finite-part generator");
  for (const auto& m : action) {
    if (m.size() != rank) fail(ErrorKind::InvalidArgument, "action matrix has the wrong size");
    for (const auto& r : m)
      if (r.size() != rank) fail(ErrorKind::InvalidArgument, "action matrix has the wrong size");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::Semidirect;
  impl->name = name.empty() ? "Z^" + std::to_string(rank) + " x| " + finite_part.name() : std::move(name);
  impl->degree = rank;
  const auto& fel = finite_part.elements();
  const std::size_t nf = fel.size();
  // extend the action from generators to all of F, checking it is a homomorphism
  std::vector<std::optional<detail::IntRows>> mats(nf);
  const std::size_t id_index = detail::index_of(fel, finite_part.identity());
  mats[id_index] = detail::mat_identity(rank);
  std::deque<std::size_t> queue{id_index};
  std::vector<std::size_t> gen_index;
  for (const auto& s : finite_part.generators()) gen_index.push_back(detail::index_of(fel, s));
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gen_index.size(); ++k) {
      const std::size_t y = detail::index_of(fel, finite_part.multiply(fel[x], fel[gen_index[k]]));
      auto m = detail::mat_mul(*mats[x], action[k]);
      if (!mats[y]) {
        mats[y] = m;
        queue.push_back(y);
      } else if (*mats[y] != m) {
        fail(ErrorKind::InvalidArgument, "action matrices do not define a homomorphism");
      }
    }
  }
  for (auto& m : mats) impl->action.push_back(*m);
  impl->finite_product.assign(nf, std::vector<std::size_t>(nf));
  impl->finite_inverse.resize(nf);
  for (std::size_t a = 0; a < nf; ++a) {
    impl->finite_inverse[a] = detail::index_of(fel, finite_part.inverse(fel[a]));
    for (std::size_t b = 0; b < nf; ++b)
      impl->finite_product[a][b] = detail::index_of(fel, finite_part.multiply(fel[a], fel[b]));
  }
  std::vector<std::int64_t> id(rank, 0);
  id.push_back(static_cast<std::int64_t>(id_index));
  impl->identity = Element(id);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::int64_t> v(rank + 1, 0);
    v[i] = 1;
    v[rank] = static_cast<std::int64_t>(id_index);
    impl->generators.emplace_back(v);
  }
  for (auto gi : gen_index) {
    std::vector<std::int64_t> v(rank + 1, 0);
    v[rank] = static_cast<std::int64_t>(gi);
    impl->generators.emplace_back(v);
  }
  impl->finite = std::make_shared<const Group>(std::move(finite_part));
  return Group(impl);
}

inline bool Group::contains(const Element& a) const {
  switch (impl_->kind) {
    case GroupKind::Permutation: {
      if (a.size() != impl_->degree) return false;
      std::vector<bool> hit(impl_->degree, false);
      for (auto x : a.code()) {
        if (x < 0 || static_cast<std::size_t>(x) >= impl_->degree || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = true;
      }
      return true;
    }
    case GroupKind::Table:
      return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < impl_->degree;
    case GroupKind::FreeAbelian:
      return a.size() == impl_->degree;
    case GroupKind::Semidirect:
      return a.size() == impl_->degree + 1 && a[impl_->degree] >= 0 &&
             static_cast<std::size_t>(a[impl_->degree]) < impl_->action.size();
  }
  return false;
}

inline Element Group::multiply(const Element& a, const Element& b) const {
  const std::size_t n = impl_->degree;
  switch (impl_->kind) {
    case GroupKind::Permutation: {
      std::vector<std::int64_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
      return Element(std::move(c));
    }
    case GroupKind::Table:
      return Element({impl_->table_rows[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])]});
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
      return Element(std::move(c));
    }
    case GroupKind::Semidirect: {
      // (v, f)(w, h) = (v + A_f w, f h)
      const auto fa = static_cast<std::size_t>(a[n]);
      const auto& m = impl_->action[fa];
      std::vector<std::int64_t> c(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = a[i];
        for (std::size_t j = 0; j < n; ++j) s += m[i][j] * b[j];
        c[i] = s;
      }
      c[n] = static_cast<std::int64_t>(impl_->finite_product[fa][static_cast<std::size_t>(b[n])]);
      return Element(std::move(c));
    }
  }
  return {};
}

inline Element Group::inverse(const Element& a) const {
  const std::size_t n = impl_->degree;
  switch (impl_->kind) {
    case GroupKind::Permutation: {
      std::vector<std::int64_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
      return Element(std::move(c));
    }
    case GroupKind::Table: {
      const auto x = static_cast<std::size_t>(a[0]);
      const auto e = impl_->identity[0];
      for (std::size_t y = 0; y < n; ++y)
        if (impl_->table_rows[x][y] == e) return Element({static_cast<std::int64_t>(y)});
      fail(ErrorKind::InvalidArgument, "table element without inverse");
    }
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = -a[i];
      return Element(std::move(c));
    }
    case GroupKind::Semidirect: {
      // (v, f)^-1 = (-A_{f^-1} v, f^-1)
      const auto fi = impl_->finite_inverse[static_cast<std::size_t>(a[n])];
      const auto& m = impl_->action[fi];
      std::vector<std::int64_t> c(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s -= m[i][j] * a[j];
        c[i] = s;
      }
      c[n] = static_cast<std::int64_t>(fi);
      return Element(std::move(c));
    }
  }
  return {};
}

inline Element Group::power(const Element& a, std::int64_t k) const {
  Element base = k < 0 ? inverse(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

// Common small groups used by the built-in models, the CLI and the tests.
namespace groups {

inline Group cyclic(std::size_t n) {
  std::vector<std::int64_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::int64_t>((i + 1) % n);
  return Group::permutation(n, n > 1 ? std::vector<Element>{Element(r)} : std::vector<Element>{},
                            "C" + std::to_string(n));
}

inline Group symmetric3() {
  return Group::permutation(3, {Element({1, 0, 2}), Element({1, 2, 0})}, "S3");
}

/// Symmetries of the square acting on its vertices 0..3.
inline Group dihedral8() {
  return Group::permutation(4, {Element({1, 2, 3, 0}), Element({0, 3, 2, 1})}, "D8");
}

/// Elementary abelian group of order 2^n, generated by disjoint transpositions.
inline Group elementary_abelian2(std::size_t n) {
  const std::size_t deg = 2 * n;
  std::vector<Element> gens;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> p(deg);
    for (std::size_t i = 0; i < deg; ++i) p[i] = static_cast<std::int64_t>(i);
    std::swap(p[2 * k], p[2 * k + 1]);
    gens.emplace_back(p);
  }
  return Group::permutation(deg, gens, n == 2 ? "C2xC2" : "C2^" + std::to_string(n));
}

/// Klein four-group acting regularly on four points.
inline Group klein_four() {
  return Group::permutation(4, {Element({1, 0, 3, 2}), Element({2, 3, 0, 1})}, "C2xC2");
}

inline Group integers() { return Group::free_abelian(1, "Z"); }

/// D_inf = Z x| C2 with the reflection acting by -1. Translation r = (1, e),
/// reflection s = (0, t).
inline Group infinite_dihedral() {
  return Group::semidirect(1, Group::permutation(2, {Element({1, 0})}, "C2"), {{{-1}}}, "Dinf");
}

}  // namespace groups

}  // namespace propeq
