#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "propeq/group.hpp"

namespace propeq {

/// A finite subgroup, stored as its sorted, duplicate-free element list. The
/// element list doubles as the canonical key: subgroups compare by (order, key).
class FiniteSubgroup {
 public:
  FiniteSubgroup() = default;
  /// `elements` must already be closed; use `closure` to build from generators.
  explicit FiniteSubgroup(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Element& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }
  bool is_subgroup_of(const FiniteSubgroup& o) const {
    return std::includes(o.elements_.begin(), o.elements_.end(), elements_.begin(), elements_.end());
  }

  bool operator==(const FiniteSubgroup&) const = default;
  /// Orders by size first, then lexicographically by element list.
  std::strong_ordering operator<=>(const FiniteSubgroup& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    return elements_ <=> o.elements_;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) s += ",";
      s += elements_[i].str();
    }
    return s + "}";
  }

 private:
  std::vector<Element> elements_;
};

inline FiniteSubgroup trivial_subgroup(const Group& g) { return FiniteSubgroup({g.identity()}); }

/// All elements of a finite-kind group, as a subgroup of itself.
inline FiniteSubgroup whole_group(const Group& g) { return FiniteSubgroup(g.elements()); }

/// Smallest subgroup containing `generators`; CapExceeded once more than `cap`
/// elements have been produced.
inline FiniteSubgroup closure(const Group& g, std::span<const Element> generators, std::size_t cap) {
  if (cap == 0) fail(ErrorKind::InvalidArgument, "closure cap must be positive");
  for (const auto& x : generators) g.require(x);
  std::set<Element> seen{g.identity()};
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Element y = g.multiply(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          fail(ErrorKind::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements in " + g.name());
        queue.push_back(y);
      }
    }
  }
  return FiniteSubgroup({seen.begin(), seen.end()});
}

inline FiniteSubgroup closure(const Group& g, const std::vector<Element>& generators, std::size_t cap) {
  return closure(g, std::span<const Element>(generators), cap);
}

/// Checks closure under products and inverses; used to validate user data.
inline bool is_subgroup(const Group& g, const FiniteSubgroup& h) {
  if (!h.contains(g.identity())) return false;
  for (const auto& a : h.elements()) {
    if (!g.contains(a) || !h.contains(g.inverse(a))) return false;
    for (const auto& b : h.elements())
      if (!h.contains(g.multiply(a, b))) return false;
  }
  return true;
}

/// ^gH = g H g^-1.
inline FiniteSubgroup conjugate_subgroup(const Group& g, const FiniteSubgroup& h, const Element& x) {
  g.require(x);
  const Element xi = g.inverse(x);
  std::vector<Element> out;
  out.reserve(h.order());
  for (const auto& a : h.elements()) {
    g.require(a);
    out.push_back(g.multiply(g.multiply(x, a), xi));
  }
  return FiniteSubgroup(std::move(out));
}

/// H^g = g^-1 H g.
inline FiniteSubgroup conjugate_subgroup_right(const Group& g, const FiniteSubgroup& h, const Element& x) {
  return conjugate_subgroup(g, h, g.inverse(x));
}

inline FiniteSubgroup intersect(const FiniteSubgroup& h, const FiniteSubgroup& k) {
  std::vector<Element> out;
  std::set_intersection(h.elements().begin(), h.elements().end(), k.elements().begin(), k.elements().end(),
                        std::back_inserter(out));
  return FiniteSubgroup(std::move(out));
}

inline FiniteSubgroup intersect(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k) {
  for (const auto& x : h.elements()) g.require(x);
  for (const auto& x : k.elements()) g.require(x);
  return intersect(h, k);
}

/// Representatives of K\X/H for subgroups K, H of the finite group X; each
/// representative is the least element of its double coset.
inline std::vector<Element> double_cosets_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& k,
                                             const FiniteSubgroup& h) {
  std::set<Element> covered;
  std::vector<Element> reps;
  for (const auto& a : x.elements()) {
    if (covered.count(a)) continue;
    reps.push_back(a);
    for (const auto& kk : k.elements()) {
      const Element ka = g.multiply(kk, a);
      for (const auto& hh : h.elements()) covered.insert(g.multiply(ka, hh));
    }
  }
  return reps;
}

/// Representatives of K\G/H for a finite-kind group G.
inline std::vector<Element> double_cosets(const FiniteSubgroup& k, const Group& g, const FiniteSubgroup& h) {
  if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "double cosets need a finite ambient group");
  return double_cosets_in(g, whole_group(g), k, h);
}

/// The double coset K g H as a sorted element list.
inline std::vector<Element> double_coset(const Group& g, const FiniteSubgroup& k, const Element& x,
                                         const FiniteSubgroup& h) {
  std::set<Element> out;
  for (const auto& a : k.elements())
    for (const auto& b : h.elements()) out.insert(g.multiply(g.multiply(a, x), b));
  return {out.begin(), out.end()};
}

/// Is y in K x H? Works in any ambient group since K, H are finite.
inline bool same_double_coset(const Group& g, const FiniteSubgroup& k, const Element& x, const FiniteSubgroup& h,
                              const Element& y) {
  const Element xi = g.inverse(x);
  for (const auto& a : k.elements()) {
    // y = a x b  <=>  b = x^-1 a^-1 y
    const Element b = g.multiply(g.multiply(xi, g.inverse(a)), y);
    if (h.contains(b)) return true;
  }
  return false;
}

/// Every subgroup of the finite group X, sorted by (order, key).
inline std::vector<FiniteSubgroup> all_subgroups(const Group& g, const FiniteSubgroup& x) {
  std::set<FiniteSubgroup> found{FiniteSubgroup({g.identity()})};
  std::deque<FiniteSubgroup> queue{*found.begin()};
  // cyclic subgroups generate everything, so only adjoin their generators
  std::vector<Element> cyclic_gens;
  std::set<FiniteSubgroup> cyclic_seen;
  for (const auto& a : x.elements()) {
    const Element gens[] = {a};
    if (cyclic_seen.insert(closure(g, gens, x.order())).second) cyclic_gens.push_back(a);
  }
  while (!queue.empty()) {
    FiniteSubgroup h = queue.front();
    queue.pop_front();
    for (const auto& a : cyclic_gens) {
      if (h.contains(a)) continue;
      std::vector<Element> gens = h.elements();
      gens.push_back(a);
      FiniteSubgroup bigger = closure(g, gens, x.order());
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

inline bool are_conjugate_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& a,
                             const FiniteSubgroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& y : x.elements())
    if (conjugate_subgroup(g, a, y) == b) return true;
  return false;
}

/// Some y in X with y A y^-1 = B, or nullopt.
inline std::optional<Element> conjugator_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& a,
                                            const FiniteSubgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& y : x.elements())
    if (conjugate_subgroup(g, a, y) == b) return y;
  return std::nullopt;
}

/// Is A conjugate in X to a subgroup of B?
inline bool is_subconjugate_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& a,
                               const FiniteSubgroup& b) {
  if (b.order() % a.order() != 0) return false;
  for (const auto& y : x.elements())
    if (conjugate_subgroup(g, a, y).is_subgroup_of(b)) return true;
  return false;
}

/// One representative per X-conjugacy class of subgroups of X, sorted by
/// (order, key); each representative is the least member of its class.
inline std::vector<FiniteSubgroup> subgroup_conjugacy_classes_in(const Group& g, const FiniteSubgroup& x) {
  const auto subs = all_subgroups(g, x);
  std::set<FiniteSubgroup> assigned;
  std::vector<FiniteSubgroup> reps;
  for (const auto& h : subs) {  // ascending, so the first unassigned member is the least of its class
    if (assigned.count(h)) continue;
    reps.push_back(h);
    for (const auto& y : x.elements()) assigned.insert(conjugate_subgroup(g, h, y));
  }
  return reps;
}

inline std::vector<FiniteSubgroup> subgroup_conjugacy_classes(const Group& g) {
  if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "subgroup classes need a finite ambient group");
  return subgroup_conjugacy_classes_in(g, whole_group(g));
}

inline FiniteSubgroup normalizer_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& h) {
  std::vector<Element> n;
  for (const auto& y : x.elements())
    if (conjugate_subgroup(g, h, y) == h) n.push_back(y);
  return FiniteSubgroup(std::move(n));
}

/// W = N/H: the normalizer and one representative (the least element) per coset.
struct WeylGroup {
  FiniteSubgroup normalizer;
  std::vector<Element> transversal;
  std::size_t order() const { return transversal.size(); }
};

inline WeylGroup weyl_group_in(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& h) {
  if (!h.is_subgroup_of(x)) fail(ErrorKind::NotASubgroup, "weyl_group: H is not contained in the group");
  WeylGroup w;
  w.normalizer = normalizer_in(g, x, h);
  std::set<Element> covered;
  for (const auto& n : w.normalizer.elements()) {
    if (covered.count(n)) continue;
    w.transversal.push_back(n);
    for (const auto& a : h.elements()) covered.insert(g.multiply(n, a));
  }
  return w;
}

inline WeylGroup weyl_group(const FiniteSubgroup& h, const Group& g) {
  if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "weyl_group needs a finite ambient group");
  return weyl_group_in(g, whole_group(g), h);
}

/// Deterministic small generating set: scan the sorted elements and keep each
/// one not already generated.
inline std::vector<Element> generating_set(const Group& g, const FiniteSubgroup& h) {
  std::vector<Element> gens;
  FiniteSubgroup current = trivial_subgroup(g);
  for (const auto& a : h.elements()) {
    if (current.contains(a)) continue;
    gens.push_back(a);
    current = closure(g, gens, h.order());
  }
  return gens;
}

/// Index of the least coset representative x H for each x (left cosets).
inline Element coset_representative(const Group& g, const Element& x, const FiniteSubgroup& h) {
  Element best = g.multiply(x, h.elements().front());
  for (const auto& a : h.elements()) best = std::min(best, g.multiply(x, a));
  return best;
}

/// Left cosets x H of H in the finite group X, as least representatives.
inline std::vector<Element> left_transversal(const Group& g, const FiniteSubgroup& x, const FiniteSubgroup& h) {
  std::set<Element> reps;
  for (const auto& a : x.elements()) reps.insert(coset_representative(g, a, h));
  return {reps.begin(), reps.end()};
}

}  // namespace propeq
