#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "weq/types.hpp"

namespace weq {

/// Integer normal vector of a rational hyperplane N(lambda) = {a : lambda . a = 0}.
///
/// Always stored in canonical form: the entries have gcd 1 and the first
/// nonzero entry is positive. lambda = lambda+ - lambda- with lambda+ . lambda- = 0.
class LambdaVector {
public:
  LambdaVector() = default;

  /// Normalizes `entries`; throws on the zero vector.
  explicit LambdaVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
  {
    normalize();
  }

  LambdaVector(std::initializer_list<std::int64_t> entries)
      : LambdaVector(std::vector<std::int64_t>(entries))
  {
  }

  /// Normalized direction of a - b.
  static LambdaVector difference(const Exponent& a, const Exponent& b)
  {
    require_same_size(a.size(), b.size(), "LambdaVector::difference");
    std::vector<std::int64_t> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      d[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
    return LambdaVector(std::move(d));
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  Exponent positive() const
  {
    Exponent e(entries_.size(), 0);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > 0) e[i] = static_cast<std::uint32_t>(entries_[i]);
    return e;
  }

  Exponent negative() const
  {
    Exponent e(entries_.size(), 0);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] < 0) e[i] = static_cast<std::uint32_t>(-entries_[i]);
    return e;
  }

  bool has_positive_part() const
  {
    for (auto v : entries_)
      if (v > 0) return true;
    return false;
  }

  bool has_negative_part() const
  {
    for (auto v : entries_)
      if (v < 0) return true;
    return false;
  }

  /// Both lambda+ and lambda- nonzero: N(lambda) meets the positive orthant.
  bool is_mixed() const { return has_positive_part() && has_negative_part(); }

  template <class Vec>
  Integer dot(const Vec& v) const
  {
    require_same_size(entries_.size(), v.size(), "LambdaVector::dot");
    Integer s = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) s += Integer(entries_[i]) * Integer(v[i]);
    return s;
  }

  friend auto operator<=>(const LambdaVector&, const LambdaVector&) = default;
  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;

private:
  void normalize()
  {
    std::int64_t g = 0;
    for (auto v : entries_) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 0) throw std::invalid_argument("LambdaVector: zero vector");
    std::int64_t sign = 1;
    for (auto v : entries_) {
      if (v != 0) {
        sign = v > 0 ? 1 : -1;
        break;
      }
    }
    for (auto& v : entries_) v = sign * v / g;
  }

  std::vector<std::int64_t> entries_;
};

} // namespace weq
