#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "propeq/abelian.hpp"
#include "propeq/mackey_functor.hpp"

namespace propeq {

/// One term coeff * [g] of a cell boundary: the orbit map G/H_cell -> G/H_face,
/// xH_cell -> x g H_face, which needs g^-1 H_cell g <= H_face.
struct BoundaryTerm {
  std::size_t face = 0;
  Element g;
  Integer coeff;
};

struct Cell {
  std::size_t dim = 0;
  FiniteSubgroup stabilizer;
  std::vector<BoundaryTerm> boundary;
};

/// A finite proper G-CW complex as a flat list of equivariant cells, each
/// with its boundary in the linearized orbit category.
struct GCWComplex {
  Group ambient;
  std::vector<Cell> cells;
  std::string name;

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
  }
  std::vector<std::size_t> cells_of_dim(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].dim == n) out.push_back(i);
    return out;
  }
};

/// Orbit maps are determined by g up to right multiplication by H_face.
inline Element normalize_orbit_map(const Group& g, const Element& x, const FiniteSubgroup& face) {
  return coset_representative(g, x, face);
}

struct ComplexViolation {
  std::string location;
  std::string detail;
  std::string str() const { return location + ": " + detail; }
};

/// Structural checks: face dimensions, orbit-map containments, stabilizers in
/// the family (when given), and boundary o boundary = 0 after collecting terms.
inline std::vector<ComplexViolation> validate(const GCWComplex& x, const SubgroupFamily* family = nullptr) {
  std::vector<ComplexViolation> out;
  const Group& g = x.ambient;
  bool structural_ok = true;
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    const auto& cell = x.cells[c];
    const std::string where = "cells[" + std::to_string(c) + "]";
    if (!is_subgroup(g, cell.stabilizer)) {
      out.push_back({where + ".stabilizer", "not a subgroup"});
      structural_ok = false;
      continue;
    }
    if (family && !family->find(cell.stabilizer))
      out.push_back({where + ".stabilizer", "stabilizer " + cell.stabilizer.str() + " is outside the family"});
    if (cell.dim == 0 && !cell.boundary.empty()) out.push_back({where + ".boundary", "0-cell with a boundary"});
    for (std::size_t b = 0; b < cell.boundary.size(); ++b) {
      const auto& t = cell.boundary[b];
      const std::string bw = where + ".boundary[" + std::to_string(b) + "]";
      if (t.face >= x.cells.size()) {
        out.push_back({bw + ".face", "no such cell"});
        structural_ok = false;
        continue;
      }
      if (x.cells[t.face].dim + 1 != cell.dim) {
        out.push_back({bw + ".face", "face is not of dimension " + std::to_string(cell.dim) + " - 1"});
        structural_ok = false;
      }
      if (!g.contains(t.g)) {
        out.push_back({bw + ".g", "element is not in the group"});
        structural_ok = false;
        continue;
      }
      if (!conjugate_subgroup_right(g, cell.stabilizer, t.g).is_subgroup_of(x.cells[t.face].stabilizer)) {
        out.push_back({bw + ".g", "g^-1 " + cell.stabilizer.str() + " g is not contained in the face stabilizer " +
                                      x.cells[t.face].stabilizer.str()});
        structural_ok = false;
      }
    }
  }
  if (!structural_ok) return out;
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    std::map<std::pair<std::size_t, Element>, Integer> acc;
    for (const auto& t1 : x.cells[c].boundary)
      for (const auto& t2 : x.cells[t1.face].boundary) {
        const Element comp = g.multiply(t1.g, t2.g);
        acc[{t2.face, normalize_orbit_map(g, comp, x.cells[t2.face].stabilizer)}] += t1.coeff * t2.coeff;
      }
    for (const auto& [key, v] : acc)
      if (v != 0)
        out.push_back({"cells[" + std::to_string(c) + "]", "boundary of the boundary has coefficient " + v.str() +
                                                               " on cells[" + std::to_string(key.first) + "] via " +
                                                               key.second.str()});
  }
  return out;
}

namespace models {

/// A single orbit G/H in dimension 0.
inline GCWComplex orbit(const Group& g, const FiniteSubgroup& h) {
  return {g, {Cell{0, h, {}}}, "orbit"};
}

inline GCWComplex point(const Group& g) { return {g, {Cell{0, whole_group(g), {}}}, "point"}; }

/// R with Z acting by translation: one free vertex v, one free edge with
/// boundary t.v - v.
inline GCWComplex line_z() {
  const Group g = groups::integers();
  const FiniteSubgroup e = trivial_subgroup(g);
  return {g, {Cell{0, e, {}}, Cell{1, e, {{0, Element({1}), 1}, {0, Element({0}), -1}}}}, "line_Z"};
}

/// R with the infinite dihedral group: vertices with stabilizers <s> and <rs>,
/// one free edge between them.
inline GCWComplex line_dinfty() {
  const Group g = groups::infinite_dihedral();
  const Element e = g.identity();
  const FiniteSubgroup s({e, Element({0, 1})});
  const FiniteSubgroup rs({e, Element({1, 1})});
  return {g,
          {Cell{0, s, {}}, Cell{0, rs, {}}, Cell{1, trivial_subgroup(g), {{0, e, 1}, {1, e, -1}}}},
          "line_Dinf"};
}

/// Mapping telescope of H_0 <= H_1 <= ... <= H_N: vertices G/H_n for every n,
/// edges G/H_n for n < N with boundary [G/H_n -> G/H_{n+1}] - [id].
inline GCWComplex telescope(const Group& g, const std::vector<FiniteSubgroup>& tower) {
  if (tower.empty()) fail(ErrorKind::EmptyTower, "telescope needs at least one subgroup");
  for (std::size_t n = 0; n + 1 < tower.size(); ++n)
    if (!tower[n].is_subgroup_of(tower[n + 1])) fail(ErrorKind::NotASubgroup, "telescope tower is not increasing");
  GCWComplex x{g, {}, "telescope"};
  for (const auto& h : tower) x.cells.push_back({0, h, {}});
  for (std::size_t n = 0; n + 1 < tower.size(); ++n)
    x.cells.push_back({1, tower[n], {{n + 1, g.identity(), 1}, {n, g.identity(), -1}}});
  return x;
}

}  // namespace models

/// C^n(X; M) = sum over n-cells of M(H_cell); the differential has block
/// (cell, face) = sum of coeff * (c_g o res^{H_face}_{g^-1 H_cell g}).
template <class Scalar>
CochainComplex<Scalar> bredon_cochain(const GCWComplex& x, const MackeyFunctor<Scalar>& m) {
  if (!x.ambient.equivalent(m.ambient()))
    fail(ErrorKind::WrongAmbient, "complex and coefficient system live over different groups");
  const auto& fam = m.family();
  const std::size_t top = x.dimension();
  CochainComplex<Scalar> c;
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Integer> orders;
    for (auto idx : x.cells_of_dim(n)) {
      if (!fam.find(x.cells[idx].stabilizer))
        fail(ErrorKind::OutsideFamily, "cells[" + std::to_string(idx) + "] has stabilizer outside the family");
      offsets[n].push_back(orders.size());
      for (const auto& o : m.orders_at(x.cells[idx].stabilizer)) orders.push_back(o);
    }
    c.orders.push_back(std::move(orders));
  }
  for (std::size_t n = 0; n < top; ++n) {
    Matrix<Scalar> d(c.orders[n + 1].size(), c.orders[n].size());
    const auto hi = x.cells_of_dim(n + 1), lo = x.cells_of_dim(n);
    for (std::size_t b = 0; b < hi.size(); ++b) {
      const auto& cell = x.cells[hi[b]];
      for (const auto& t : cell.boundary) {
        const auto pos = std::find(lo.begin(), lo.end(), t.face) - lo.begin();
        const auto& face = x.cells[t.face];
        const auto block = m.span_map(face.stabilizer, cell.stabilizer, cell.stabilizer, t.g);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t col = 0; col < block.cols(); ++col)
            d(offsets[n + 1][b] + r, offsets[n][static_cast<std::size_t>(pos)] + col) += Scalar(t.coeff) * block(r, col);
      }
    }
    if constexpr (std::is_same_v<Scalar, Integer>) abelian::reduce(c.orders[n + 1], d);
    c.differentials.push_back(std::move(d));
  }
  return c;
}

/// Bredon cohomology H^n_G(X; M) for every n.
template <class Scalar>
std::vector<FGAbelianGroup> bredon_cohomology(const GCWComplex& x, const MackeyFunctor<Scalar>& m) {
  return cohomology(bredon_cochain(x, m));
}

}  // namespace propeq
