#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "propeq/abelian.hpp"
#include "propeq/gcw.hpp"

namespace propeq {

/// Coefficient layers pi_k indexed by homotopy degree k in [k_min, k_max];
/// degrees outside the window are unknown, not zero.
template <class Scalar>
struct CoefficientTower {
  int k_min = 0;
  int k_max = -1;
  std::map<int, MackeyFunctor<Scalar>> layers;

  bool known(int k) const { return k >= k_min && k <= k_max && layers.count(k); }
  const MackeyFunctor<Scalar>& layer(int k) const {
    if (!known(k)) fail(ErrorKind::WindowMiss, "no coefficient layer for homotopy degree " + std::to_string(k));
    return layers.at(k);
  }
};

template <class Scalar>
CoefficientTower<Scalar> single_layer_tower(int k, MackeyFunctor<Scalar> m) {
  CoefficientTower<Scalar> t{k, k, {}};
  t.layers.emplace(k, std::move(m));
  return t;
}

/// E_r^{p,q} with q = -k for the layer pi_k. Rows outside the tower window
/// are listed in `unknown_rows`.
template <class Scalar>
struct SSPage {
  int r = 1;
  std::size_t max_p = 0;
  std::map<std::pair<std::size_t, int>, FGAbelianGroup> entries;  // (p, q)
  std::map<int, CochainComplex<Scalar>> rows;                      // E_1 rows with d_1, by q
  std::vector<int> unknown_rows;
  int q_min = 0, q_max = -1;

  const FGAbelianGroup& at(std::size_t p, int q) const {
    auto it = entries.find({p, q});
    if (it == entries.end()) fail(ErrorKind::WindowMiss, "E" + std::to_string(r) + "^{" + std::to_string(p) + "," +
                                                             std::to_string(q) + "} is not known");
    return it->second;
  }
  bool known(std::size_t p, int q) const { return entries.count({p, q}) > 0; }
};

/// E_1^{p,q} = C^p(X; pi_{-q}) with d_1 the Bredon differential.
template <class Scalar>
SSPage<Scalar> e1_page(const GCWComplex& x, const CoefficientTower<Scalar>& t) {
  SSPage<Scalar> page;
  page.r = 1;
  page.max_p = x.dimension();
  page.q_min = -t.k_max;
  page.q_max = -t.k_min;
  for (int k = t.k_min; k <= t.k_max; ++k) {
    const int q = -k;
    if (!t.known(k)) {
      page.unknown_rows.push_back(q);
      continue;
    }
    auto c = bredon_cochain(x, t.layer(k));
    for (std::size_t p = 0; p < c.length(); ++p) {
      if constexpr (std::is_same_v<Scalar, Integer>)
        page.entries.emplace(std::make_pair(p, q), abelian::classify(c.orders[p]));
      else
        page.entries.emplace(std::make_pair(p, q), FGAbelianGroup::free(c.dimension(p)));
    }
    page.rows.emplace(q, std::move(c));
  }
  std::sort(page.unknown_rows.begin(), page.unknown_rows.end());
  return page;
}

/// Row-wise cohomology of d_1.
template <class Scalar>
SSPage<Scalar> e2_page(const SSPage<Scalar>& e1) {
  if (e1.r != 1) fail(ErrorKind::InvalidArgument, "e2_page expects the E_1 page");
  SSPage<Scalar> page = e1;
  page.r = 2;
  page.entries.clear();
  for (const auto& [q, c] : e1.rows) {
    const auto h = cohomology(c);
    for (std::size_t p = 0; p < h.size(); ++p) page.entries.emplace(std::make_pair(p, q), h[p]);
  }
  return page;
}

/// Associated graded of pi_n (total degree p + q = -n) for a complex of
/// dimension <= 1: E_2^{0,-n} and E_2^{1,-n-1}. A piece is nullopt when its
/// row is unknown.
struct AbutmentPiece {
  int degree = 0;
  std::optional<FGAbelianGroup> column0;
  std::optional<FGAbelianGroup> column1;
  bool extension_problem = false;
  bool exact = false;  // abutment determined: complete data and at most one nonzero piece
};

struct CollapseReport {
  std::size_t dimension = 0;
  int collapse_page = 1;
  std::vector<AbutmentPiece> pieces;  // only for dimension <= 1
  std::vector<std::string> notes;
};

template <class Scalar>
CollapseReport collapse_report(const GCWComplex& x, const SSPage<Scalar>& e2) {
  CollapseReport rep;
  rep.dimension = x.dimension();
  rep.collapse_page = std::max(2, static_cast<int>(rep.dimension) + 1);
  if (rep.dimension > 1) {
    rep.notes.push_back("differentials d_r for 2 <= r <= " + std::to_string(rep.dimension) +
                        " are not determined by the algebraic data");
    return rep;
  }
  // homotopy degrees touched by the known rows
  std::set<int> degrees;
  for (const auto& [q, c] : e2.rows) {
    degrees.insert(-q);
    if (rep.dimension == 1) degrees.insert(-q - 1);
  }
  for (int n : degrees) {
    AbutmentPiece piece;
    piece.degree = n;
    if (e2.known(0, -n)) piece.column0 = e2.at(0, -n);
    if (rep.dimension == 0) {
      piece.column1 = FGAbelianGroup{};
    } else if (e2.known(1, -n - 1)) {
      piece.column1 = e2.at(1, -n - 1);
    }
    const bool complete = piece.column0 && piece.column1;
    const bool nz0 = piece.column0 && !piece.column0->is_zero();
    const bool nz1 = piece.column1 && !piece.column1->is_zero();
    piece.extension_problem = nz0 && nz1;
    piece.exact = complete && !(nz0 && nz1);
    if (!complete) rep.notes.push_back("degree " + std::to_string(n) + " has a piece outside the coefficient window");
    rep.pieces.push_back(std::move(piece));
  }
  return rep;
}

/// Mittag-Leffler status on a finite truncation: images are only visible up
/// to the depth of the tower.
enum class MittagLeffler { Holds, Indeterminate };

inline std::string to_string(MittagLeffler m) { return m == MittagLeffler::Holds ? "holds" : "indeterminate"; }

struct LimResult {
  FGAbelianGroup lim;
  FGAbelianGroup lim1;
  MittagLeffler ml = MittagLeffler::Indeterminate;
  bool all_surjective = false;
};

/// lim and lim^1 of the truncated inverse system A_0 <- A_1 <- ... <- A_N,
/// maps[n] : A_{n+1} -> A_n, as kernel and cokernel of the shift-difference
/// map  prod_{n<=N} A_n -> prod_{n<N} A_n,  (a_n) -> (a_n - f_n(a_{n+1})).
inline LimResult lim_lim1(const std::vector<FGAbelianGroup>& groups, const std::vector<IntMatrix>& maps) {
  if (groups.empty()) fail(ErrorKind::EmptyTower, "lim_lim1 needs a nonempty tower");
  if (maps.size() + 1 != groups.size()) fail(ErrorKind::InvalidArgument, "need one map per consecutive pair");
  std::vector<std::vector<Integer>> ords;
  for (const auto& a : groups) ords.push_back(a.orders());
  for (std::size_t n = 0; n < maps.size(); ++n)
    if (!abelian::is_well_defined(ords[n + 1], ords[n], maps[n]))
      fail(ErrorKind::InvalidArgument, "tower map " + std::to_string(n) + " is not a homomorphism");

  std::vector<Integer> total, lower;
  std::vector<std::size_t> off;
  for (std::size_t n = 0; n < groups.size(); ++n) {
    off.push_back(total.size());
    total.insert(total.end(), ords[n].begin(), ords[n].end());
    if (n + 1 < groups.size()) lower.insert(lower.end(), ords[n].begin(), ords[n].end());
  }
  IntMatrix delta(lower.size(), total.size());
  for (std::size_t n = 0; n + 1 < groups.size(); ++n) {
    delta.set_block(off[n], off[n], IntMatrix::identity(ords[n].size()));
    delta.set_block(off[n], off[n + 1], -1 * maps[n]);
  }
  abelian::reduce(lower, delta);
  IntegerCochainComplex c{{total, lower}, {delta}};
  if (groups.size() == 1) c = IntegerCochainComplex{{total}, {}};
  const auto h = cohomology(c);

  LimResult out;
  out.lim = h[0];
  out.lim1 = h.size() > 1 ? h[1] : FGAbelianGroup{};
  out.all_surjective = true;
  for (std::size_t n = 0; n < maps.size(); ++n)
    out.all_surjective = out.all_surjective && abelian::is_surjective(ords[n], maps[n]);
  if (out.all_surjective) {
    out.ml = MittagLeffler::Holds;
    return out;
  }
  // images im(A_m -> A_n) must visibly stabilize: the last two agree at every
  // level deep enough to show two of them, and at least one level must be
  bool stable = true;
  std::size_t checked = 0;
  for (std::size_t n = 0; n < groups.size() && stable; ++n) {
    std::vector<IntMatrix> images;
    IntMatrix comp = IntMatrix::identity(ords[n].size());
    for (std::size_t m = n; m < maps.size(); ++m) {
      comp = comp * maps[m];
      images.push_back(hconcat(comp, abelian::relation_matrix(ords[n])));
    }
    if (images.size() < 2) continue;
    ++checked;
    const auto& a = images[images.size() - 2];
    const auto& b = images.back();
    stable = lattice::contains(a, b) && lattice::contains(b, a);
  }
  out.ml = stable && checked ? MittagLeffler::Holds : MittagLeffler::Indeterminate;
  return out;
}

}  // namespace propeq
