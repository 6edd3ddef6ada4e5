#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/int.hpp"

namespace gtutte {

// Dense univariate polynomial over Z. Coefficient i belongs to exponent i;
// no trailing zeros are stored, so the zero polynomial is the empty vector
// and degree() has no value for it.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }
  IntPolynomial(std::initializer_list<Int> ascending) : c_(ascending) { trim(); }

  static IntPolynomial constant(Int c) {
    return IntPolynomial(std::vector<Int>{std::move(c)});
  }
  static IntPolynomial monomial(Int coeff, std::size_t deg) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int evaluate(const Int& t) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Int& k) {
    for (Int& c : c_) c *= k;
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Int& k) { return a *= k; }
  friend IntPolynomial operator*(const Int& k, IntPolynomial a) { return a *= k; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= Int(-1); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  bool operator==(const IntPolynomial&) const = default;

  // "3t^2 - 4t + 4" style, highest degree first.
  std::string str(const std::string& var = "t") const { return format(var, false); }
  // Same with braced exponents: "3t^{2} - 4t + 4".
  std::string latex(const std::string& var = "t") const { return format(var, true); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::string format(const std::string& var, bool braced) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      const bool neg = c_[i] < 0;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const Int mag = abs(c_[i]);
      if (mag != 1 || i == 0) s += mag.get_str();
      if (i >= 1) s += var;
      if (i >= 2)
        s += braced ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
    }
    return s;
  }

  std::vector<Int> c_;
};

// Polynomial over Z in two variables, kept as a map from exponent pairs to
// nonzero coefficients; std::map gives the canonical lexicographic term
// order used for serialization.
class BivariatePolynomial {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  void add_term(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = m_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }

  Int coeff(std::size_t i, std::size_t j) const {
    auto it = m_.find(Key{i, j});
    return it == m_.end() ? Int(0) : it->second;
  }

  const std::map<Key, Int>& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }

  Int evaluate(const Int& x, const Int& y) const {
    Int v = 0;
    for (const auto& [k, c] : m_) v += c * int_pow(x, k.first) * int_pow(y, k.second);
    return v;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [k, c] : o.m_) add_term(k.first, k.second, c);
    return *this;
  }

  bool operator==(const BivariatePolynomial&) const = default;

  // "x^2 y + 3x - 1" style, highest terms first.
  std::string str() const {
    if (m_.empty()) return "0";
    std::string s;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
      const auto& [k, c] = *it;
      const bool neg = c < 0;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const Int mag = abs(c);
      const bool constant = k.first == 0 && k.second == 0;
      if (mag != 1 || constant) s += mag.get_str();
      auto put = [&s](const char* v, std::size_t e) {
        if (e == 0) return;
        s += v;
        if (e >= 2) s += "^" + std::to_string(e);
      };
      put("x", k.first);
      if (k.first > 0 && k.second > 0) s += " ";
      put("y", k.second);
    }
    return s;
  }

 private:
  std::map<Key, Int> m_;
};

// p += c * (x-1)^a * (y-1)^b, expanded via the binomial theorem.
inline void add_scaled_shift_power(BivariatePolynomial& p, const Int& c,
                                   std::size_t a, std::size_t b) {
  if (c == 0) return;
  for (std::size_t i = 0; i <= a; ++i) {
    const Int xi = binomial(a, i) * ((a - i) % 2 ? Int(-1) : Int(1));
    for (std::size_t j = 0; j <= b; ++j) {
      const Int yj = binomial(b, j) * ((b - j) % 2 ? Int(-1) : Int(1));
      p.add_term(i, j, c * xi * yj);
    }
  }
}

}  // namespace gtutte
