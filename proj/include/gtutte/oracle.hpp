#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtutte/abelian.hpp"
#include "gtutte/group.hpp"
#include "gtutte/int.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/transforms.hpp"
#include "gtutte/tutte.hpp"

namespace gtutte {

namespace detail {

// Machine-word arithmetic keeps the enumeration fast; (q-1)^2 + q must stay
// below 2^63, hence the modulus bound enforced by the callers.
inline constexpr std::int64_t max_enum_modulus = std::int64_t{1} << 31;

inline std::int64_t reduced(const Int& x, std::int64_t q) {
  return static_cast<std::int64_t>(mod_floor(x, Int(q)).get_ui());
}

// Count assignments of one image per generator such that every constraint
// sum_g coeff[g] * image[g] is zero mod q (must_vanish) or nonzero mod q
// (otherwise). Plain mixed-radix walk, pruned at the last generator that
// can still change each constraint.
inline std::int64_t enumerate_count(const std::vector<std::vector<std::int64_t>>& images,
                                    const std::vector<std::vector<std::int64_t>>& coeffs,
                                    const std::vector<bool>& must_vanish,
                                    std::int64_t q) {
  const std::size_t ngen = images.size();
  const std::size_t ncon = coeffs.size();

  std::vector<std::vector<std::size_t>> due(ngen);
  for (std::size_t i = 0; i < ncon; ++i) {
    std::size_t last = ngen;
    for (std::size_t g = 0; g < ngen; ++g)
      if (coeffs[i][g] % q != 0) last = g;
    if (last == ngen) {
      // constraint value is identically zero
      if (!must_vanish[i]) return 0;
      continue;
    }
    due[last].push_back(i);
  }

  std::int64_t count = 0;
  std::vector<std::vector<std::int64_t>> partial(ngen + 1,
                                                 std::vector<std::int64_t>(ncon, 0));
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == ngen) {
      ++count;
      return;
    }
    const auto& cur = partial[g];
    auto& nxt = partial[g + 1];
    for (std::int64_t v : images[g]) {
      for (std::size_t i = 0; i < ncon; ++i)
        nxt[i] = (cur[i] + coeffs[i][g] * v) % q;
      bool ok = true;
      for (std::size_t i : due[g])
        if ((nxt[i] == 0) != must_vanish[i]) {
          ok = false;
          break;
        }
      if (ok) self(self, g + 1);
    }
  };
  rec(rec, 0);
  return count;
}

inline void check_modulus(const Int& q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (q >= max_enum_modulus)
    throw cap_exceeded("modulus " + q.get_str() +
                       " too large for machine-word enumeration");
}

inline void check_enum_cap(const Int& total, const Int& enum_cap) {
  if (total > enum_cap)
    throw cap_exceeded("enumeration too large: " + total.get_str() +
                       " candidates exceeds cap " + enum_cap.get_str());
}

}  // namespace detail

// #{hom phi: Gamma -> Z/q | phi(alpha) != 0 for every alpha in a}, by
// walking every homomorphism. A free generator can map to any residue; a
// torsion generator of order d only to the gcd(d, q) multiples of
// q/gcd(d, q).
inline Int bm_count(const FgAbelianGroup& gamma, const ElementList& a, const Int& q,
                    const Int& enum_cap = default_enum_cap) {
  detail::require_in_group(gamma, a);
  detail::check_modulus(q);
  Int total = int_pow(q, gamma.free_rank());
  for (const Int& d : gamma.invariant_factors()) total *= gcd(d, q);
  detail::check_enum_cap(total, enum_cap);

  const std::int64_t qi = q.get_si();
  const std::size_t r = gamma.free_rank();
  const std::size_t n = gamma.coord_size();

  std::vector<std::vector<std::int64_t>> images(n);
  for (std::size_t g = 0; g < r; ++g) {
    images[g].resize(qi);
    for (std::int64_t v = 0; v < qi; ++v) images[g][v] = v;
  }
  for (std::size_t i = 0; i < gamma.torsion_count(); ++i) {
    const std::int64_t cnt = Int(gcd(gamma.invariant_factors()[i], q)).get_si();
    const std::int64_t step = qi / cnt;
    for (std::int64_t t = 0; t < cnt; ++t) images[r + i].push_back(t * step);
  }

  std::vector<std::vector<std::int64_t>> coeffs(a.size(),
                                                std::vector<std::int64_t>(n));
  for (std::size_t e = 0; e < a.size(); ++e)
    for (std::size_t g = 0; g < n; ++g)
      coeffs[e][g] = detail::reduced(a[e].coords[g], qi);

  return Int(detail::enumerate_count(images, coeffs,
                                     std::vector<bool>(a.size(), false), qi));
}

// #{z in (Z/q)^ell | every column of A pairs to nonzero, every column of B
// pairs to zero}, by walking all q^ell vectors.
inline Int cw_count(const CwInstance& cw, const Int& q,
                    const Int& enum_cap = default_enum_cap) {
  check_cw(cw);
  detail::check_modulus(q);
  detail::check_enum_cap(int_pow(q, cw.ell), enum_cap);

  const std::int64_t qi = q.get_si();
  std::vector<std::vector<std::int64_t>> images(cw.ell);
  for (auto& img : images) {
    img.resize(qi);
    for (std::int64_t v = 0; v < qi; ++v) img[v] = v;
  }

  const std::size_t na = cw.a.cols(), nb = cw.b.cols();
  std::vector<std::vector<std::int64_t>> coeffs(na + nb,
                                                std::vector<std::int64_t>(cw.ell));
  std::vector<bool> must_vanish(na + nb, false);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t g = 0; g < cw.ell; ++g)
      coeffs[j][g] = detail::reduced(cw.a.at(g, j), qi);
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t g = 0; g < cw.ell; ++g)
      coeffs[na + j][g] = detail::reduced(cw.b.at(g, j), qi);
    must_vanish[na + j] = true;
  }

  return Int(detail::enumerate_count(images, coeffs, must_vanish, qi));
}

// cw_count with no vanishing constraints.
inline Int ktt_count(const IntMatrix& a, std::size_t ell, const Int& q,
                     const Int& enum_cap = default_enum_cap) {
  return cw_count(CwInstance{a, IntMatrix(ell, 0), ell}, q, enum_cap);
}

struct VerifyRow {
  Int q, oracle, symbolic;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_pass = true;

  std::string str() const {
    std::string s;
    for (const auto& r : rows)
      s += "q=" + r.q.get_str() + " oracle=" + r.oracle.get_str() +
           " symbolic=" + r.symbolic.get_str() + (r.pass ? " PASS" : " FAIL") + "\n";
    return s;
  }
};

// Brute-force count vs. quasi-polynomial evaluation for q = 1..q_max.
inline VerifyReport verify(const FgAbelianGroup& gamma, const ElementList& a,
                           const Int& q_max,
                           std::size_t subset_cap = default_subset_cap,
                           const Int& enum_cap = default_enum_cap) {
  const QuasiPolynomial f = chromatic_quasi(gamma, a, subset_cap);
  VerifyReport rep;
  for (Int q = 1; q <= q_max; ++q) {
    VerifyRow row;
    row.q = q;
    row.oracle = bm_count(gamma, a, q, enum_cap);
    row.symbolic = f.evaluate(q);
    row.pass = row.oracle == row.symbolic;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace gtutte
