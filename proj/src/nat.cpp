#include "disjoint/nat.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace disjoint {

Nat::Nat(BigInt v) : value_(std::move(v)) {
  if (value_.sign() < 0) throw std::domain_error("Nat: negative value");
}

Nat Nat::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Nat: empty decimal string");
  BigInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Nat: not a decimal natural: '" + std::string(text) + "'");
    }
    v *= 10;
    v += c - '0';
  }
  return Nat(std::move(v));
}

bool Nat::fits_u64() const noexcept {
  return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Nat: value exceeds 64 bits: " + to_string());
  return value_.convert_to<std::uint64_t>();
}

Nat& Nat::operator-=(const Nat& o) {
  if (value_ < o.value_) throw std::domain_error("Nat: subtraction underflow");
  value_ -= o.value_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw std::domain_error("Nat: division by zero");
  value_ /= o.value_;
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw std::domain_error("Nat: division by zero");
  value_ %= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.to_string(); }

Nat floor_nat(const Rational& r) {
  if (r < 0) throw std::domain_error("floor_nat: negative rational");
  return Nat(BigInt(boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r)));
}

std::string format_fixed(const Real& r, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << r;
  return os.str();
}

std::string format_significant(const Rational& r, int digits) {
  const Real v = Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace disjoint
