#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/int.hpp"
#include "gtutte/polynomial.hpp"

namespace gtutte {

// Integer-valued function on positive arguments given by one polynomial per
// residue class mod a period rho. Two storage layouts:
//   * full: one polynomial per class 1..rho;
//   * compressed: one polynomial per divisor of rho, valid when the
//     constituent of class k depends only on gcd(k, rho); class k is then
//     served by the polynomial at key gcd(k, rho).
class QuasiPolynomial {
 public:
  // Zero function with period 1.
  QuasiPolynomial() : period_(1), full_(1) {}

  static QuasiPolynomial from_classes(const Int& period,
                                      std::vector<IntPolynomial> by_class) {
    check_period(period);
    if (!period.fits_ulong_p() || by_class.size() != period.get_ui())
      throw std::invalid_argument("need exactly one constituent per class 1..period");
    QuasiPolynomial f;
    f.period_ = period;
    f.full_ = std::move(by_class);
    return f;
  }

  static QuasiPolynomial from_divisors(const Int& period,
                                       std::map<Int, IntPolynomial> by_divisor) {
    check_period(period);
    const std::vector<Int> divs = divisors(period);
    if (by_divisor.size() != divs.size())
      throw std::invalid_argument("need exactly one constituent per divisor of the period");
    for (const Int& d : divs)
      if (!by_divisor.count(d))
        throw std::invalid_argument("missing constituent for divisor " + d.get_str());
    QuasiPolynomial f;
    f.period_ = period;
    f.full_.clear();
    f.compressed_ = true;
    f.by_divisor_ = std::move(by_divisor);
    return f;
  }

  static QuasiPolynomial from_polynomial(IntPolynomial p) {
    std::map<Int, IntPolynomial> m;
    m.emplace(Int(1), std::move(p));
    return from_divisors(Int(1), std::move(m));
  }

  const Int& period() const { return period_; }
  bool compressed() const { return compressed_; }
  const std::map<Int, IntPolynomial>& divisor_constituents() const {
    if (!compressed_) throw std::logic_error("quasi-polynomial is stored by class");
    return by_divisor_;
  }
  const std::vector<IntPolynomial>& class_constituents() const {
    if (compressed_) throw std::logic_error("quasi-polynomial is stored by divisor");
    return full_;
  }

  // Constituent governing arguments q with q = k mod period, k in 1..period.
  const IntPolynomial& constituent(const Int& k) const {
    if (k < 1) throw std::invalid_argument("class must be positive");
    if (compressed_) return by_divisor_.at(gcd(k, period_));
    const Int idx = mod_floor(k - 1, period_);
    return full_[idx.get_ui()];
  }

  Int evaluate(const Int& q) const {
    if (q < 1) throw std::invalid_argument("argument must be positive");
    return constituent(q).evaluate(q);
  }

  bool is_zero() const {
    if (compressed_) {
      for (const auto& [d, p] : by_divisor_)
        if (!p.is_zero()) return false;
      return true;
    }
    for (const auto& p : full_)
      if (!p.is_zero()) return false;
    return true;
  }

  // Same function presented with a period that is a multiple of the current
  // one. Compressed input stays compressed (serving class k of the new
  // period by gcd still picks the old gcd class, since the old period
  // divides the new one).
  QuasiPolynomial lift_period(const Int& rho_new) const {
    check_period(rho_new);
    if (rho_new % period_ != 0)
      throw std::invalid_argument("new period " + rho_new.get_str() +
                                  " is not a multiple of " + period_.get_str());
    if (compressed_) {
      std::map<Int, IntPolynomial> m;
      for (const Int& e : divisors(rho_new)) m.emplace(e, constituent(e));
      return from_divisors(rho_new, std::move(m));
    }
    if (!rho_new.fits_ulong_p())
      throw std::overflow_error("period too large for class-wise storage");
    const std::size_t n = rho_new.get_ui();
    std::vector<IntPolynomial> by_class(n);
    for (std::size_t k = 0; k < n; ++k) by_class[k] = full_[k % full_.size()];
    return from_classes(rho_new, std::move(by_class));
  }

  // Class-wise storage of the same function.
  QuasiPolynomial expand() const {
    if (!compressed_) return *this;
    if (!period_.fits_ulong_p())
      throw std::overflow_error("period too large for class-wise storage");
    const std::size_t n = period_.get_ui();
    std::vector<IntPolynomial> by_class(n);
    for (std::size_t k = 0; k < n; ++k) by_class[k] = constituent(Int(k + 1));
    return from_classes(period_, std::move(by_class));
  }

  // Divisor-keyed storage; requires constituents to depend only on
  // gcd(class, period).
  QuasiPolynomial compress() const {
    if (compressed_) return *this;
    std::map<Int, IntPolynomial> m;
    for (std::size_t k = 0; k < full_.size(); ++k) {
      const Int g = gcd(Int(k + 1), period_);
      auto [it, inserted] = m.try_emplace(g, full_[k]);
      if (!inserted && it->second != full_[k])
        throw std::logic_error("constituents do not depend on gcd(class, period) alone");
    }
    return from_divisors(period_, std::move(m));
  }

  bool operator==(const QuasiPolynomial&) const = default;

 private:
  static void check_period(const Int& period) {
    if (period < 1) throw std::invalid_argument("period must be positive");
  }

  Int period_;
  bool compressed_ = false;
  std::vector<IntPolynomial> full_;        // class k at index k-1
  std::map<Int, IntPolynomial> by_divisor_;
};

// True iff classes with equal gcd(class, period) carry identical
// polynomials. Compressed storage satisfies this by construction.
inline bool has_gcd_property(const QuasiPolynomial& f) {
  if (f.compressed()) return true;
  std::map<Int, const IntPolynomial*> seen;
  const auto& by_class = f.class_constituents();
  for (std::size_t k = 0; k < by_class.size(); ++k) {
    const Int g = gcd(Int(k + 1), f.period());
    auto [it, inserted] = seen.try_emplace(g, &by_class[k]);
    if (!inserted && *it->second != by_class[k]) return false;
  }
  return true;
}

namespace detail {

template <typename Combine>
QuasiPolynomial qp_combine(const QuasiPolynomial& f, const QuasiPolynomial& g,
                           Combine&& combine) {
  const Int rho = lcm(f.period(), g.period());
  const QuasiPolynomial lf = f.lift_period(rho);
  const QuasiPolynomial lg = g.lift_period(rho);
  if (lf.compressed() && lg.compressed()) {
    std::map<Int, IntPolynomial> m;
    for (const auto& [d, p] : lf.divisor_constituents())
      m.emplace(d, combine(p, lg.divisor_constituents().at(d)));
    return QuasiPolynomial::from_divisors(rho, std::move(m));
  }
  const QuasiPolynomial ef = lf.expand();
  const QuasiPolynomial eg = lg.expand();
  std::vector<IntPolynomial> by_class(ef.class_constituents().size());
  for (std::size_t k = 0; k < by_class.size(); ++k)
    by_class[k] = combine(ef.class_constituents()[k], eg.class_constituents()[k]);
  return QuasiPolynomial::from_classes(rho, std::move(by_class));
}

}  // namespace detail

inline QuasiPolynomial qp_add(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  return detail::qp_combine(f, g, [](const IntPolynomial& a, const IntPolynomial& b) {
    return a + b;
  });
}

inline QuasiPolynomial qp_sub(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  return detail::qp_combine(f, g, [](const IntPolynomial& a, const IntPolynomial& b) {
    return a - b;
  });
}

inline QuasiPolynomial qp_scale(const QuasiPolynomial& f, const Int& c) {
  if (f.compressed()) {
    std::map<Int, IntPolynomial> m;
    for (const auto& [d, p] : f.divisor_constituents()) m.emplace(d, p * c);
    return QuasiPolynomial::from_divisors(f.period(), std::move(m));
  }
  std::vector<IntPolynomial> by_class = f.class_constituents();
  for (auto& p : by_class) p *= c;
  return QuasiPolynomial::from_classes(f.period(), std::move(by_class));
}

// Equal as functions on positive integers (storage and period may differ).
inline bool same_function(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  return qp_sub(f, g).is_zero();
}

// Smallest divisor rho' of the period such that classes k and k + rho'
// always share a constituent. Exact polynomial comparison, so no heuristics
// are involved.
inline Int minimal_period(const QuasiPolynomial& f) {
  if (!f.period().fits_ulong_p())
    throw std::overflow_error("period too large for minimal-period scan");
  const unsigned long rho = f.period().get_ui();
  for (const Int& cand : divisors(f.period())) {
    const unsigned long c = cand.get_ui();
    bool ok = true;
    for (unsigned long k = 1; k + c <= rho && ok; ++k)
      ok = f.constituent(Int(k)) == f.constituent(Int(k + c));
    if (ok) return cand;
  }
  return f.period();  // unreachable: the period itself always qualifies
}

}  // namespace gtutte
