#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <stdexcept>
#include <string_view>
#include <type_traits>

namespace disjoint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 166-bit mantissa; comfortably above the 64 bits needed for ratio rendering.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction that would go negative throws std::domain_error; every other
/// operation is closed over the naturals.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw std::domain_error("Nat: negative value");
    }
  }

  explicit Nat(BigInt v);

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Nat parse(std::string_view text);

  const BigInt& big() const noexcept { return value_; }
  std::string to_string() const { return value_.str(); }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws std::overflow_error

  Nat& operator+=(const Nat& o) {
    value_ += o.value_;
    return *this;
  }
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o) {
    value_ *= o.value_;
    return *this;
  }
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Nat& operator++() {
    ++value_;
    return *this;
  }

 private:
  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

inline Rational make_rational(const Nat& num, const Nat& den) {
  return Rational(num.big(), den.big());
}

inline Real to_real(const Nat& n) { return Real(n.big()); }

/// floor(r) for a nonnegative rational.
Nat floor_nat(const Rational& r);

/// Fixed-point rendering with `decimals` digits after the point.
std::string format_fixed(const Real& r, int decimals);

/// Decimal rendering of a rational to `digits` significant digits.
std::string format_significant(const Rational& r, int digits);

}  // namespace disjoint
