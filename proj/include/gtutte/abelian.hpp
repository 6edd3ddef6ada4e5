#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtutte/group.hpp"
#include "gtutte/int.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/snf.hpp"

namespace gtutte {

// Linear map from a group's coordinates onto a quotient's normalized
// coordinates (free coordinates first, then torsion).
class CosetMap {
 public:
  CosetMap() = default;
  CosetMap(FgAbelianGroup source, FgAbelianGroup target, IntMatrix rows)
      : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {}

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& rows() const { return rows_; }

  GroupElement apply(const GroupElement& e) const {
    if (e.coords.size() != source_.coord_size())
      throw std::invalid_argument("element not in group");
    std::vector<Int> y(rows_.rows(), Int(0));
    for (std::size_t i = 0; i < rows_.rows(); ++i)
      for (std::size_t j = 0; j < rows_.cols(); ++j)
        y[i] += rows_.at(i, j) * e.coords[j];
    const std::size_t r = target_.free_rank();
    const auto& ds = target_.invariant_factors();
    for (std::size_t i = 0; i < ds.size(); ++i) y[r + i] = mod_floor(y[r + i], ds[i]);
    return GroupElement(std::move(y));
  }

  ElementList apply(const ElementList& list) const {
    if (list.group() != source_)
      throw std::invalid_argument("element not in group");
    ElementList out(target_);
    for (const auto& e : list.elements()) out.push_back(apply(e));
    return out;
  }

 private:
  FgAbelianGroup source_, target_;
  IntMatrix rows_;
};

struct QuotientResult {
  FgAbelianGroup group;  // Gamma / <S> in invariant-factor form
  CosetMap map;
};

namespace detail {

inline void require_in_group(const FgAbelianGroup& gamma, const ElementList& s) {
  if (s.group() != gamma)
    throw std::invalid_argument("element not in group: list group is " +
                                s.group().descriptor() + ", expected " +
                                gamma.descriptor());
}

// Columns of the presentation matrix for Gamma/<S>: the lifts of S together
// with the relation columns d_i * e_{r+i}.
inline IntMatrix relation_matrix(const FgAbelianGroup& gamma, const ElementList& s) {
  const std::size_t n = gamma.coord_size();
  const std::size_t r = gamma.free_rank();
  const auto& ds = gamma.invariant_factors();
  IntMatrix m(n, s.size() + ds.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = s[j].coords[i];
  for (std::size_t i = 0; i < ds.size(); ++i) m.at(r + i, s.size() + i) = ds[i];
  return m;
}

}  // namespace detail

// Presentation of Gamma/<S> plus the map sending an element of Gamma to its
// coset. Invariant factors equal to 1 are dropped and torsion follows the
// free part.
inline QuotientResult quotient(const FgAbelianGroup& gamma, const ElementList& s) {
  detail::require_in_group(gamma, s);
  const std::size_t n = gamma.coord_size();
  const SnfResult f = snf(detail::relation_matrix(gamma, s));
  const std::size_t rank = f.rank();

  std::vector<Int> factors;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < rank; ++i)
    if (f.d[i] > 1) {
      factors.push_back(f.d[i]);
      torsion_rows.push_back(i);
    }
  FgAbelianGroup q(n - rank, std::move(factors));

  IntMatrix rows(q.coord_size(), n);
  std::size_t out = 0;
  for (std::size_t i = rank; i < n; ++i, ++out)  // free coordinates
    for (std::size_t j = 0; j < n; ++j) rows.at(out, j) = f.u.at(i, j);
  for (std::size_t i : torsion_rows) {
    for (std::size_t j = 0; j < n; ++j) rows.at(out, j) = f.u.at(i, j);
    ++out;
  }
  return {q, CosetMap(gamma, q, std::move(rows))};
}

// r_S, the rank of the subgroup <S> of gamma.
inline std::size_t subgroup_rank(const FgAbelianGroup& gamma, const ElementList& s) {
  return gamma.free_rank() - quotient(gamma, s).group.free_rank();
}

// m(S;G) = #Hom((Gamma/<S>)_tor, G).
inline Int multiplicity(const FgAbelianGroup& gamma, const ElementList& s,
                        const GSpec& g) {
  const FgAbelianGroup q = quotient(gamma, s).group;
  Int m = 1;
  for (const Int& d : q.invariant_factors()) m *= g.hom_count_from_cyclic(d);
  return m;
}

// lcm over all sublists S of A of the largest torsion invariant of
// Gamma/<S> (1 when the quotient is free).
inline Int lcm_period(const FgAbelianGroup& gamma, const ElementList& a,
                      std::size_t subset_cap = default_subset_cap) {
  detail::require_in_group(gamma, a);
  if (a.size() > subset_cap)
    throw cap_exceeded("list too large: " + std::to_string(a.size()) +
                       " elements exceeds subset cap " + std::to_string(subset_cap));
  Int period = 1;
  const SubsetMask full = a.full_mask();
  for (SubsetMask mask = 0;; ++mask) {
    const FgAbelianGroup q = quotient(gamma, a.sublist(mask)).group;
    const auto& factors = q.invariant_factors();
    if (!factors.empty()) period = lcm(period, factors.back());
    if (mask == full) break;
  }
  return period;
}

// #Hom(Gamma, Z/qZ) = q^r * prod gcd(d_i, q).
inline Int hom_count(const FgAbelianGroup& gamma, const Int& q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (!q.fits_ulong_p() && gamma.free_rank() > 0)
    throw std::overflow_error("q too large");
  Int h = gamma.free_rank() ? int_pow(q, gamma.free_rank()) : Int(1);
  for (const Int& d : gamma.invariant_factors()) h *= gcd(d, q);
  return h;
}

}  // namespace gtutte
