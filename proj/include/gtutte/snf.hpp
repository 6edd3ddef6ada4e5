#pragma once

#include <cstddef>
#include <vector>

#include "gtutte/int.hpp"
#include "gtutte/matrix.hpp"

namespace gtutte {

// Smith normal form u*m*v = diag(d). u and v are unimodular, the d are
// nonnegative, each nonzero d[i] divides d[i+1], and zeros trail. d has
// min(rows, cols) entries.
struct SnfResult {
  std::vector<Int> d;
  IntMatrix u, v;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const Int& x : d)
      if (x != 0) ++r;
    return r;
  }
};

namespace detail {

// Truncated quotient; the remainder a - q*b satisfies |r| < |b|.
inline Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

// Deterministic elimination with smallest-|pivot| selection at each step.
// Transforms are always accumulated; quotient maps need them.
inline SnfResult snf(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMatrix b = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);
  const std::size_t steps = nr < nc ? nr : nc;

  for (std::size_t t = 0; t < steps; ++t) {
    // smallest nonzero |entry| in the trailing submatrix
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        const Int& x = b.at(i, j);
        if (x == 0) continue;
        if (pi == nr ||
            mpz_cmpabs(x.get_mpz_t(), b.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == nr) break;  // trailing submatrix is zero
    if (pi != t) {
      b.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      b.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }

    for (;;) {
      // clear column t below the pivot; a nonzero remainder becomes the
      // new (strictly smaller) pivot
      for (std::size_t i = t + 1; i < nr; ++i) {
        while (b.at(i, t) != 0) {
          Int q = detail::tdiv(b.at(i, t), b.at(t, t));
          if (q != 0) {
            b.add_row(i, t, -q);
            u.add_row(i, t, -q);
          }
          if (b.at(i, t) != 0) {
            b.swap_rows(t, i);
            u.swap_rows(t, i);
          }
        }
      }
      // clear row t; a column swap can dirty the column again
      bool col_dirty = false;
      for (std::size_t j = t + 1; j < nc; ++j) {
        while (b.at(t, j) != 0) {
          Int q = detail::tdiv(b.at(t, j), b.at(t, t));
          if (q != 0) {
            b.add_col(j, t, -q);
            v.add_col(j, t, -q);
          }
          if (b.at(t, j) != 0) {
            b.swap_cols(t, j);
            v.swap_cols(t, j);
            col_dirty = true;
          }
        }
      }
      if (col_dirty) continue;
      // pivot must divide the whole trailing submatrix for the chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < nr && !fixed; ++i)
        for (std::size_t j = t + 1; j < nc && !fixed; ++j)
          if (!mpz_divisible_p(b.at(i, j).get_mpz_t(), b.at(t, t).get_mpz_t())) {
            b.add_row(t, i, 1);
            u.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (b.at(t, t) < 0) {
      b.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult r;
  r.d.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) r.d[t] = b.at(t, t);
  r.u = std::move(u);
  r.v = std::move(v);
  return r;
}

}  // namespace gtutte
