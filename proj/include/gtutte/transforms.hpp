#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/abelian.hpp"
#include "gtutte/group.hpp"
#include "gtutte/int.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/snf.hpp"

namespace gtutte {

// Congruence-system instance over Z^ell: columns of a must stay nonzero
// mod q, columns of b must vanish mod q. b may have zero columns.
struct CwInstance {
  IntMatrix a;
  IntMatrix b;
  std::size_t ell = 0;
};

inline void check_cw(const CwInstance& cw) {
  if (cw.a.rows() != cw.ell && cw.a.cols() > 0)
    throw std::invalid_argument("cw matrix A must have ell rows");
  if (cw.b.rows() != cw.ell && cw.b.cols() > 0)
    throw std::invalid_argument("cw matrix B must have ell rows");
}

// Free presentation of a list over a group with torsion: integer
// representatives a_tilde plus the relation vectors q_list (element i of
// q_list is d_i at free coordinate r+i).
struct Lifting {
  ElementList a_tilde;
  ElementList q_list;
};

namespace detail {

inline void check_mask(const ElementList& a, SubsetMask mask) {
  if (mask & ~a.full_mask())
    throw std::out_of_range("bad index: mask selects beyond the list");
}

}  // namespace detail

// Drop the elements addressed by s_mask; the group is unchanged.
inline ElementList deletion(const ElementList& a, SubsetMask s_mask) {
  detail::check_mask(a, s_mask);
  return a.sublist(a.full_mask() & ~s_mask);
}

// Pass to Gamma/<S> and the cosets of the remaining elements. Cosets that
// become zero are kept: they are loops and the multiset bookkeeping of the
// deletion-contraction recursion needs them.
inline std::pair<FgAbelianGroup, ElementList> contraction(const FgAbelianGroup& gamma,
                                                          const ElementList& a,
                                                          SubsetMask s_mask) {
  detail::check_mask(a, s_mask);
  const QuotientResult qr = quotient(gamma, a.sublist(s_mask));
  return {qr.group, qr.map.apply(a.sublist(a.full_mask() & ~s_mask))};
}

// (A, B, Z^ell) -> the pair (Z^ell/<B>, images of A). Counting solutions of
// the congruence system equals counting nowhere-zero homomorphisms of the
// quotient pair, so the two oracle counts must agree for every modulus.
inline std::pair<FgAbelianGroup, ElementList> cw_to_bm(const CwInstance& cw) {
  check_cw(cw);
  const FgAbelianGroup zl = FgAbelianGroup::free(cw.ell);
  ElementList bl(zl);
  for (std::size_t j = 0; j < cw.b.cols(); ++j) bl.push_back(GroupElement(cw.b.column(j)));
  const QuotientResult qr = quotient(zl, bl);
  ElementList al(zl);
  for (std::size_t j = 0; j < cw.a.cols(); ++j) al.push_back(GroupElement(cw.a.column(j)));
  return {qr.group, qr.map.apply(al)};
}

// Inverse direction: present (gamma, a) as a congruence system over
// Z^{r+s}. Representatives are the normalized coordinates; the relation
// list has d_i at coordinate r+i. Any other representative choice differs
// by a combination of the relations and yields the same counts.
inline std::pair<CwInstance, Lifting> bm_to_cw(const FgAbelianGroup& gamma,
                                               const ElementList& a) {
  detail::require_in_group(gamma, a);
  const std::size_t ell = gamma.coord_size();
  const std::size_t r = gamma.free_rank();
  const FgAbelianGroup zl = FgAbelianGroup::free(ell);

  ElementList a_tilde(zl);
  for (const auto& e : a.elements()) a_tilde.push_back(GroupElement(e.coords));

  ElementList q_list(zl);
  const auto& ds = gamma.invariant_factors();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<Int> v(ell, Int(0));
    v[r + i] = ds[i];
    q_list.push_back(GroupElement(std::move(v)));
  }

  CwInstance cw;
  cw.ell = ell;
  std::vector<std::vector<Int>> acols;
  for (const auto& e : a_tilde.elements()) acols.push_back(e.coords);
  std::vector<std::vector<Int>> bcols;
  for (const auto& e : q_list.elements()) bcols.push_back(e.coords);
  cw.a = IntMatrix::from_columns(ell, acols);
  cw.b = IntMatrix::from_columns(ell, bcols);
  return {std::move(cw), Lifting{std::move(a_tilde), std::move(q_list)}};
}

// Vertex count plus edge multiset, 1-indexed; loops and parallel edges are
// allowed.
struct Graph {
  std::size_t n_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Edge (i, j) becomes the vector +1 at j, -1 at i over Z^{#V}; counting
// nowhere-zero homomorphisms then counts proper colorings with q colors.
// A loop edge (i, i) becomes the zero vector.
inline std::pair<FgAbelianGroup, ElementList> graph_to_list(const Graph& g) {
  const FgAbelianGroup zv = FgAbelianGroup::free(g.n_vertices);
  ElementList l(zv);
  for (const auto& [i, j] : g.edges) {
    if (i < 1 || i > g.n_vertices || j < 1 || j > g.n_vertices)
      throw std::out_of_range("bad vertex index: edge (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") on " +
                              std::to_string(g.n_vertices) + " vertices");
    std::vector<Int> v(g.n_vertices, Int(0));
    v[j - 1] += 1;
    v[i - 1] -= 1;
    l.push_back(GroupElement(std::move(v)));
  }
  return {zv, l};
}

// Split a into (a minus torsion elements, torsion elements); an element is
// torsion exactly when its free coordinates vanish.
inline std::pair<ElementList, ElementList> torsion_split(const FgAbelianGroup& gamma,
                                                         const ElementList& a) {
  detail::require_in_group(gamma, a);
  const std::size_t r = gamma.free_rank();
  SubsetMask tor = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    bool free_zero = true;
    for (std::size_t i = 0; i < r && free_zero; ++i) free_zero = a[t].coords[i] == 0;
    if (free_zero) tor |= SubsetMask{1} << t;
  }
  return {a.sublist(a.full_mask() & ~tor), a.sublist(tor)};
}

namespace detail {

inline std::size_t column_rank(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
  return snf(IntMatrix::from_columns(rows, cols)).rank();
}

}  // namespace detail

// Indices of the elements lying in the rational span of the elements
// addressed by s_mask (the sublist cutting out the same flat). Membership
// is decided by exact integer rank comparison.
inline SubsetMask localization_mask(const ElementList& a, SubsetMask s_mask) {
  if (!a.group().is_free())
    throw std::invalid_argument("free group required for localization");
  detail::check_mask(a, s_mask);
  const std::size_t n = a.group().coord_size();
  std::vector<std::vector<Int>> span_cols;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (s_mask >> t & 1) {
      if (a[t].is_zero())
        throw std::invalid_argument("zero element in the localization sublist");
      span_cols.push_back(a[t].coords);
    }
  const std::size_t base_rank = detail::column_rank(n, span_cols);
  SubsetMask out = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    span_cols.push_back(a[t].coords);
    if (detail::column_rank(n, span_cols) == base_rank) out |= SubsetMask{1} << t;
    span_cols.pop_back();
  }
  return out;
}

inline ElementList localization(const ElementList& a, SubsetMask s_mask) {
  return a.sublist(localization_mask(a, s_mask));
}

}  // namespace gtutte
