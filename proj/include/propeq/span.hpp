#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "propeq/burnside.hpp"
#include "propeq/subgroup.hpp"

namespace propeq {

/// A basic span [L, gamma] in A_G(H, K): G/H <- G/L -> G/K with
/// xL -> x gamma H and xL -> xK. Requires L <= K and gamma^-1 L gamma <= H.
/// As a map M(H) -> M(K) it reads tr^K_L o c_gamma o res^H_{L^gamma}.
struct TransitiveSpan {
  FiniteSubgroup source;  // H
  FiniteSubgroup target;  // K
  FiniteSubgroup mid;     // L
  Element gamma;

  bool operator==(const TransitiveSpan&) const = default;
  /// Within fixed endpoints: by (L, gamma).
  auto operator<=>(const TransitiveSpan& o) const {
    if (auto c = source <=> o.source; c != 0) return c;
    if (auto c = target <=> o.target; c != 0) return c;
    if (auto c = mid <=> o.mid; c != 0) return c;
    return gamma <=> o.gamma;
  }
};

inline void validate_span(const Group& g, const TransitiveSpan& s) {
  g.require(s.gamma);
  if (!s.mid.is_subgroup_of(s.target))
    fail(ErrorKind::NotASubgroup, "span middle " + s.mid.str() + " is not contained in the target");
  if (!conjugate_subgroup_right(g, s.mid, s.gamma).is_subgroup_of(s.source))
    fail(ErrorKind::NotASubgroup, "gamma^-1 L gamma is not contained in the source");
}

/// The least representative of the orbit {(k^-1 L k, k^-1 gamma h)}.
inline TransitiveSpan canonicalize(const Group& g, const TransitiveSpan& s) {
  TransitiveSpan best = s;
  bool first = true;
  for (const auto& k : s.target.elements()) {
    const Element ki = g.inverse(k);
    FiniteSubgroup l = conjugate_subgroup(g, s.mid, ki);
    if (!first && best.mid < l) continue;
    const Element kg = g.multiply(ki, s.gamma);
    Element gam = coset_representative(g, kg, s.source);
    if (first || l < best.mid || (l == best.mid && gam < best.gamma)) {
      best.mid = std::move(l);
      best.gamma = std::move(gam);
      first = false;
    }
  }
  return best;
}

inline bool span_equivalent(const Group& g, const TransitiveSpan& s, const TransitiveSpan& t) {
  if (s.source != t.source || s.target != t.target)
    fail(ErrorKind::MismatchedEndpoints, "spans have different endpoints");
  const Element si = g.inverse(s.gamma);
  for (const auto& k : s.target.elements()) {
    if (conjugate_subgroup_right(g, s.mid, k) != t.mid) continue;
    if (s.source.contains(g.multiply(g.multiply(si, k), t.gamma))) return true;
  }
  return false;
}

/// Identity of H: [H, e].
inline TransitiveSpan identity_span(const Group& g, const FiniteSubgroup& h) { return {h, h, h, g.identity()}; }
/// res^H_K as an element of A(H, K).
inline TransitiveSpan restriction_span(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k) {
  return {h, k, k, g.identity()};
}
/// tr^H_L as an element of A(L, H).
inline TransitiveSpan transfer_span(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& l) {
  return {l, h, l, g.identity()};
}
/// c_x : X -> xXx^-1.
inline TransitiveSpan conjugation_span(const Group& g, const FiniteSubgroup& x, const Element& c) {
  auto t = conjugate_subgroup(g, x, c);
  return {x, t, t, c};
}

/// A finite Z-combination of basic spans with common endpoints, kept in
/// canonical form: canonical spans, sorted, no zero coefficients.
struct MackeyHomElement {
  FiniteSubgroup source;
  FiniteSubgroup target;
  std::vector<std::pair<TransitiveSpan, Integer>> terms;

  bool operator==(const MackeyHomElement&) const = default;
};

inline MackeyHomElement normalize(const Group& g, FiniteSubgroup source, FiniteSubgroup target,
                                  const std::vector<std::pair<TransitiveSpan, Integer>>& terms) {
  std::map<TransitiveSpan, Integer> acc;
  for (const auto& [s, c] : terms) {
    if (s.source != source || s.target != target) fail(ErrorKind::MismatchedEndpoints, "term has wrong endpoints");
    acc[canonicalize(g, s)] += c;
  }
  MackeyHomElement out{std::move(source), std::move(target), {}};
  for (auto& [s, c] : acc)
    if (c != 0) out.terms.emplace_back(s, c);
  return out;
}

inline MackeyHomElement as_element(const Group& g, const TransitiveSpan& s, Integer c = 1) {
  validate_span(g, s);
  return normalize(g, s.source, s.target, {{s, c}});
}

inline MackeyHomElement add(const Group& g, const MackeyHomElement& a, const MackeyHomElement& b) {
  if (a.source != b.source || a.target != b.target) fail(ErrorKind::MismatchedEndpoints, "sum of different hom groups");
  auto terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return normalize(g, a.source, a.target, terms);
}

/// alpha o beta for basic spans beta = [L, gamma] : H -> K and
/// alpha = [P, delta] : K -> J. With Q = delta^-1 P delta <= K:
///   alpha o beta = sum over k in Q\K/L of [delta (Q n kLk^-1) delta^-1, delta k gamma].
/// Only the finite group K is enumerated.
inline std::vector<TransitiveSpan> compose_basic(const Group& g, const TransitiveSpan& beta,
                                                 const TransitiveSpan& alpha) {
  if (beta.target != alpha.source) fail(ErrorKind::MismatchedEndpoints, "composition endpoints do not match");
  const FiniteSubgroup& k = beta.target;
  const FiniteSubgroup q = conjugate_subgroup_right(g, alpha.mid, alpha.gamma);
  std::vector<TransitiveSpan> out;
  for (const auto& x : double_cosets_in(g, k, q, beta.mid)) {
    const FiniteSubgroup m = conjugate_subgroup(g, intersect(q, conjugate_subgroup(g, beta.mid, x)), alpha.gamma);
    out.push_back({beta.source, alpha.target, m, g.multiply(g.multiply(alpha.gamma, x), beta.gamma)});
  }
  return out;
}

/// alpha o beta : H -> J.
inline MackeyHomElement compose(const Group& g, const MackeyHomElement& beta, const MackeyHomElement& alpha) {
  if (beta.target != alpha.source) fail(ErrorKind::MismatchedEndpoints, "composition endpoints do not match");
  std::vector<std::pair<TransitiveSpan, Integer>> terms;
  for (const auto& [b, cb] : beta.terms)
    for (const auto& [a, ca] : alpha.terms)
      for (auto& s : compose_basic(g, b, a)) terms.emplace_back(std::move(s), cb * ca);
  return normalize(g, beta.source, alpha.target, terms);
}

/// Composition by forming the fibre product G/L x_{G/K} G/P of finite G-sets
/// and reading off one basic span per orbit.
inline MackeyHomElement pullback_oracle(const Group& g, const MackeyHomElement& beta, const MackeyHomElement& alpha) {
  if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "the pullback oracle needs a finite group");
  if (beta.target != alpha.source) fail(ErrorKind::MismatchedEndpoints, "composition endpoints do not match");
  std::vector<std::pair<TransitiveSpan, Integer>> terms;
  for (const auto& [b, cb] : beta.terms)
    for (const auto& [a, ca] : alpha.terms) {
      const auto xs = left_transversal(g, whole_group(g), b.mid);
      const auto ys = left_transversal(g, whole_group(g), a.mid);
      std::set<std::pair<Element, Element>> points;
      for (const auto& x : xs)
        for (const auto& y : ys)
          if (coset_representative(g, x, b.target) ==
              coset_representative(g, g.multiply(y, a.gamma), b.target))
            points.emplace(x, y);
      std::set<std::pair<Element, Element>> seen;
      for (const auto& start : points) {
        if (seen.count(start)) continue;
        std::deque<std::pair<Element, Element>> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
          auto [x, y] = queue.front();
          queue.pop_front();
          for (const auto& s : g.generators()) {
            std::pair<Element, Element> next{coset_representative(g, g.multiply(s, x), b.mid),
                                             coset_representative(g, g.multiply(s, y), a.mid)};
            if (seen.insert(next).second) queue.push_back(next);
          }
        }
        const auto& [x, y] = start;
        const Element yx = g.multiply(g.inverse(y), x);
        const FiniteSubgroup stab = intersect(conjugate_subgroup(g, b.mid, yx), a.mid);
        terms.push_back({TransitiveSpan{b.source, a.target, stab, g.multiply(yx, b.gamma)}, cb * ca});
      }
    }
  return normalize(g, beta.source, alpha.target, terms);
}

/// Canonical basis of A_G(H, K) for finite G: all (L <= K, gamma) modulo
/// span equivalence.
inline std::vector<TransitiveSpan> hom_basis(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k) {
  if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "hom_basis needs a finite group");
  std::set<TransitiveSpan> out;
  for (const auto& l : all_subgroups(g, k))
    for (const auto& gam : left_transversal(g, whole_group(g), h))
      if (conjugate_subgroup_right(g, l, gam).is_subgroup_of(h)) out.insert(canonicalize(g, {h, k, l, gam}));
  return {out.begin(), out.end()};
}

/// Number of subgroup classes of a finite subgroup X, i.e. rank A(X).
inline std::size_t burnside_rank(const Group& g, const FiniteSubgroup& x) {
  return subgroup_conjugacy_classes_in(g, x).size();
}

/// rank A_G(H, K) = sum over K gamma H of rank A(K n gamma H gamma^-1). For
/// infinite G the double-coset representatives must be supplied; they are
/// checked to be pairwise inequivalent.
inline std::size_t hom_rank(const Group& g, const FiniteSubgroup& h, const FiniteSubgroup& k,
                            const std::optional<std::vector<Element>>& witnesses = std::nullopt) {
  std::vector<Element> reps;
  if (witnesses) {
    reps = *witnesses;
    for (const auto& w : reps) g.require(w);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (same_double_coset(g, k, reps[j], h, reps[i]))
          fail(ErrorKind::InvalidArgument, "double coset witnesses " + reps[j].str() + " and " + reps[i].str() +
                                               " represent the same double coset");
  } else {
    if (!g.is_finite()) fail(ErrorKind::InfiniteAmbient, "hom_rank over an infinite group needs double coset witnesses");
    reps = double_cosets(k, g, h);
  }
  std::size_t r = 0;
  for (const auto& x : reps) r += burnside_rank(g, intersect(k, conjugate_subgroup(g, h, x)));
  return r;
}

/// K-orbits of G/H: one (gamma, K n gamma H gamma^-1) per K\G/H.
inline std::vector<std::pair<Element, FiniteSubgroup>> restrict_orbit_decomposition(const Group& g,
                                                                                    const FiniteSubgroup& k,
                                                                                    const FiniteSubgroup& h) {
  std::vector<std::pair<Element, FiniteSubgroup>> out;
  for (const auto& x : double_cosets(k, g, h)) out.emplace_back(x, intersect(k, conjugate_subgroup(g, h, x)));
  return out;
}

}  // namespace propeq
