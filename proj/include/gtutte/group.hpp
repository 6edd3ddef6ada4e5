#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/int.hpp"

namespace gtutte {

// Finitely generated abelian group in invariant-factor form:
//   Z^r + Z/d1 + ... + Z/ds   with 1 < d1 | d2 | ... | ds.
// Elements are coordinate vectors of length r + s; torsion coordinate i is
// kept normalized into [0, d_i).
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
      : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] <= 1)
        throw std::invalid_argument("invariant factor must exceed 1");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t torsion_count() const { return factors_.size(); }
  std::size_t coord_size() const { return free_rank_ + factors_.size(); }
  bool is_free() const { return factors_.empty(); }

  bool operator==(const FgAbelianGroup& o) const {
    return free_rank_ == o.free_rank_ && factors_ == o.factors_;
  }
  bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

  // Text form "Z^r + Z/d1 + ... + Z/ds" (whitespace-insensitive; "Z/dZ"
  // accepted; "Z^0" names the trivial group).
  static FgAbelianGroup parse(const std::string& text);
  std::string descriptor() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> factors_;
};

// A coordinate vector relative to some group's presentation. The owning
// ElementList knows the group and keeps torsion coordinates normalized.
struct GroupElement {
  std::vector<Int> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<Int> c) : coords(std::move(c)) {}

  bool operator==(const GroupElement& o) const { return coords == o.coords; }
  bool is_zero() const {
    for (const Int& c : coords)
      if (c != 0) return false;
    return true;
  }
};

// Ordered multiset of elements of one group. Duplicates are kept; sublists
// are addressed by index bitmasks so multiset bookkeeping stays exact.
class ElementList {
 public:
  ElementList() = default;
  explicit ElementList(FgAbelianGroup group) : group_(std::move(group)) {}
  ElementList(const FgAbelianGroup& group, const std::vector<std::vector<Int>>& coords)
      : group_(group) {
    elems_.reserve(coords.size());
    for (const auto& c : coords) {
      GroupElement e(c);
      normalize(e);
      elems_.push_back(std::move(e));
    }
  }

  const FgAbelianGroup& group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const GroupElement& operator[](std::size_t i) const { return elems_.at(i); }
  const std::vector<GroupElement>& elements() const { return elems_; }

  void push_back(GroupElement e) {
    normalize(e);
    elems_.push_back(std::move(e));
  }

  // Elements whose index bit is set, in list order.
  ElementList sublist(SubsetMask mask) const {
    ElementList s(group_);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (mask >> i & 1) s.elems_.push_back(elems_[i]);
    return s;
  }

  SubsetMask full_mask() const {
    return elems_.size() >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << elems_.size()) - 1;
  }

  bool operator==(const ElementList& o) const {
    return group_ == o.group_ && elems_ == o.elems_;
  }

 private:
  void normalize(GroupElement& e) const {
    if (e.coords.size() != group_.coord_size())
      throw std::invalid_argument("element not in group: expected " +
                                  std::to_string(group_.coord_size()) +
                                  " coordinates, got " + std::to_string(e.coords.size()));
    const std::size_t r = group_.free_rank();
    const auto& ds = group_.invariant_factors();
    for (std::size_t i = 0; i < ds.size(); ++i)
      e.coords[r + i] = mod_floor(e.coords[r + i], ds[i]);
  }

  FgAbelianGroup group_;
  std::vector<GroupElement> elems_;
};

// Coefficient group G for multiplicities: a finite direct sum of cyclic
// groups Z/k, copies of Z, and copies of Q/Z. Every such G is torsion-wise
// finite, which is all m(S;G) needs.
class GSpec {
 public:
  enum class Kind { cyclic, integers, circle };
  struct Component {
    Kind kind;
    Int modulus;  // used when kind == cyclic
  };

  static GSpec cyclic(Int k) {
    if (k < 1) throw std::invalid_argument("cyclic order must be positive");
    return GSpec({{Kind::cyclic, std::move(k)}});
  }
  static GSpec integers() { return GSpec({{Kind::integers, 0}}); }
  static GSpec circle() { return GSpec({{Kind::circle, 0}}); }

  GSpec direct_sum(const GSpec& o) const {
    GSpec r = *this;
    r.comps_.insert(r.comps_.end(), o.comps_.begin(), o.comps_.end());
    return r;
  }

  const std::vector<Component>& components() const { return comps_; }

  // #Hom(Z/d, G) for d >= 1.
  Int hom_count_from_cyclic(const Int& d) const {
    Int m = 1;
    for (const auto& c : comps_) {
      switch (c.kind) {
        case Kind::cyclic:
          m *= gcd(d, c.modulus);
          break;
        case Kind::integers:
          break;  // only the trivial map
        case Kind::circle:
          m *= d;
          break;
      }
    }
    return m;
  }

  // "k:<int>" cyclic, "Z" integers, "QZ" circle.
  static GSpec parse(const std::string& text);
  std::string str() const;

 private:
  explicit GSpec(std::vector<Component> comps) : comps_(std::move(comps)) {}
  std::vector<Component> comps_;
};

// --- text forms ---------------------------------------------------------

namespace detail {

inline std::string strip_ws(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

inline Int parse_uint(const std::string& tok, const std::string& field) {
  if (tok.empty()) throw parse_error(field, "expected a number");
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(field, "expected a number, got '" + tok + "'");
  return Int(tok);
}

}  // namespace detail

inline FgAbelianGroup FgAbelianGroup::parse(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  if (s.empty()) throw parse_error("group", "empty descriptor");
  std::size_t free_rank = 0;
  std::vector<Int> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    pos = end + 1;
    if (tok == "Z") {
      free_rank += 1;
    } else if (tok.rfind("Z^", 0) == 0) {
      Int r = detail::parse_uint(tok.substr(2), "group");
      if (!r.fits_ulong_p()) throw parse_error("group", "free rank too large");
      free_rank += r.get_ui();
    } else if (tok.rfind("Z/", 0) == 0) {
      std::string d = tok.substr(2);
      if (!d.empty() && d.back() == 'Z') d.pop_back();
      Int k = detail::parse_uint(d, "group");
      if (k < 2) throw parse_error("group", "torsion order must be at least 2");
      factors.push_back(k);
    } else {
      throw parse_error("group", "unrecognized summand '" + tok + "'");
    }
  }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] % factors[i - 1] != 0)
      throw parse_error("group",
                        "torsion orders must form a divisibility chain "
                        "(invariant-factor form); got " + factors[i - 1].get_str() +
                        " followed by " + factors[i].get_str());
  return FgAbelianGroup(free_rank, std::move(factors));
}

inline std::string FgAbelianGroup::descriptor() const {
  std::string s;
  if (free_rank_ > 0 || factors_.empty())
    s = "Z^" + std::to_string(free_rank_);
  for (const Int& d : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

inline GSpec GSpec::parse(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  if (s == "Z") return integers();
  if (s == "QZ" || s == "Q/Z") return circle();
  if (s.rfind("k:", 0) == 0) {
    Int k = detail::parse_uint(s.substr(2), "g");
    if (k < 1) throw parse_error("g", "cyclic order must be positive");
    return cyclic(k);
  }
  throw parse_error("g", "expected k:<int>, Z, or QZ; got '" + text + "'");
}

inline std::string GSpec::str() const {
  std::string s;
  for (const auto& c : comps_) {
    if (!s.empty()) s += " + ";
    switch (c.kind) {
      case Kind::cyclic:
        s += "Z/" + c.modulus.get_str();
        break;
      case Kind::integers:
        s += "Z";
        break;
      case Kind::circle:
        s += "Q/Z";
        break;
    }
  }
  return s;
}

}  // namespace gtutte
