#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtutte {

// Exact arbitrary-precision integer. Every quantity in the library is one of
// these; there is no floating point anywhere.
using Int = mpz_class;

// Index bitmask addressing a sublist of an ElementList (bit i = element i).
using SubsetMask = std::uint64_t;

inline constexpr std::size_t default_subset_cap = 24;
inline const Int default_enum_cap = 10000000;

// Thrown when a computation would exceed a configured cap
// (subset enumeration or brute-force enumeration size).
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by text/JSON input parsing; `field()` names the offending field.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string field, const std::string& what)
      : std::runtime_error("field '" + field + "': " + what),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer exceeds 64-bit range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

// x reduced into [0, m) for m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Divisors of n > 0, ascending.
inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> lo, hi;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::size_t popcount(SubsetMask m) {
  std::size_t c = 0;
  while (m) {
    m &= m - 1;
    ++c;
  }
  return c;
}

}  // namespace gtutte
