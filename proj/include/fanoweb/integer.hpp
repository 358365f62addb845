#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanoweb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Exact integer of unbounded size.
 *
 * Values that fit in 64 bits are stored inline and combined with
 * overflow-checked machine arithmetic; any result that leaves the 64-bit
 * range is carried as a BigInt. Results that shrink back into range are
 * demoted again, so equal values always have the same representation.
 */
class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT
    if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<BigInt>(v);
    }
  }

  explicit Integer(const BigInt& v) { assign(v); }

  explicit Integer(std::string_view decimal) {
    if (decimal.empty()) throw std::invalid_argument("empty integer literal");
    try {
      assign(BigInt(std::string(decimal)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("malformed integer literal '" + std::string(decimal) + "'");
    }
  }

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
  [[nodiscard]] BigInt to_big() const { return big_ ? *big_ : BigInt(small_); }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return big_->sign();
    return (small_ > 0) - (small_ < 0);
  }
  [[nodiscard]] std::string str() const { return big_ ? big_->str() : std::to_string(small_); }

  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() + o.to_big());
    return *this;
  }

  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() - o.to_big());
    return *this;
  }

  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() * o.to_big());
    return *this;
  }

  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("integer division by zero");
    if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
      small_ /= o.small_;
      return *this;
    }
    assign(to_big() / o.to_big());
    return *this;
  }

  Integer& operator%=(const Integer& o) {
    if (o.is_zero()) throw std::domain_error("integer division by zero");
    if (!big_ && !o.big_) {
      small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
      return *this;
    }
    assign(to_big() % o.to_big());
    return *this;
  }

  friend Integer operator-(const Integer& a) {
    if (!a.big_ && a.small_ != kMin) return Integer(-a.small_);
    return Integer(BigInt(-a.to_big()));
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in 64 bits
  }

  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = a.to_big().compare(b.to_big());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

  [[nodiscard]] std::size_t hash() const noexcept {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->str());
  }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  void assign(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      small_ = v.convert_to<std::int64_t>();
      big_.reset();
    } else {
      small_ = 0;
      big_ = std::make_unique<BigInt>(v);
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

inline Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

/// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Largest q with q*b <= a.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

/// Smallest q with q*b >= a.
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) == (b.sign() < 0))) q += 1;
  return q;
}

/// Bezout coefficients: x*a + y*b = g with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Rational to_rational(const Integer& v) { return Rational(v.to_big()); }

}  // namespace fanoweb

template <>
struct std::hash<fanoweb::Integer> {
  std::size_t operator()(const fanoweb::Integer& v) const noexcept { return v.hash(); }
};
