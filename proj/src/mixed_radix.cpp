#include "disjoint/mixed_radix.hpp"

#include <stdexcept>

namespace disjoint {

namespace {

bool allowed(Parity parity, std::size_t position) {
  return (position % 2 == 0) == (parity == Parity::Even);
}

void require_below_top(const MixedRadixSpec& spec, const Nat& x, const char* who) {
  if (x >= spec.top()) {
    throw ExtendSpecError(std::string(who) + ": " + x.to_string() + " >= P_n = " + spec.top().to_string() +
                          "; extend the spec");
  }
}

Nat next_modulus(const MixedRadixSpec& spec, const GrowthRule& rule) {
  if (const auto* c = std::get_if<ConstantGrowth>(&rule)) return c->modulus;
  const std::size_t i = spec.size();
  Nat m = Nat(i) * spec.m(i);
  return m < Nat(2) ? Nat(2) : m;
}

}  // namespace

MixedRadixSpec::MixedRadixSpec(std::vector<Nat> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("MixedRadixSpec: no moduli");
  places_.reserve(moduli_.size() + 1);
  places_.emplace_back(1);
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < Nat(2)) {
      throw std::invalid_argument("MixedRadixSpec: modulus m_" + std::to_string(i + 1) + " = " +
                                  moduli_[i].to_string() + " is below 2");
    }
    places_.push_back(places_.back() * moduli_[i]);
  }
}

MixedRadixSpec MixedRadixSpec::uniform(const Nat& k, std::size_t n) {
  return MixedRadixSpec(std::vector<Nat>(n, k));
}

std::vector<Nat> MixedRadixSpec::digits(const Nat& x) const {
  require_below_top(*this, x, "digits");
  std::vector<Nat> d;
  d.reserve(moduli_.size());
  BigInt rest = x.big();
  for (const Nat& m : moduli_) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rest, m.big(), q, r);
    d.emplace_back(std::move(r));
    rest = std::move(q);
  }
  return d;
}

MixedRadixSpec MixedRadixSpec::appended(const Nat& m) const {
  auto mods = moduli_;
  mods.push_back(m);
  return MixedRadixSpec(std::move(mods));
}

Nat mixed_radix_count(const MixedRadixSpec& spec, Parity parity, const Nat& x) {
  const auto d = spec.digits(x);
  const std::size_t n = spec.size();

  // free_below[j]: how many parity-set members use only positions < j.
  std::vector<BigInt> free_below(n + 1);
  free_below[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    free_below[j + 1] = allowed(parity, j) ? free_below[j] * spec.m(j + 1).big() : free_below[j];
  }

  BigInt count = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (allowed(parity, j)) {
      count += d[j].big() * free_below[j];
    } else if (!d[j].is_zero()) {
      // Digit 0 here undercuts x; every lower completion counts, and x itself is out.
      count += free_below[j];
      return Nat(std::move(count));
    }
  }
  return Nat(std::move(count + 1));
}

IntSet mixed_radix_side(const MixedRadixSpec& spec, Parity parity, const Nat& limit) {
  require_below_top(spec, limit, "mixed_radix_side");
  std::vector<std::size_t> free_pos;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (allowed(parity, j)) free_pos.push_back(j);
  }

  std::vector<Nat> out;
  std::vector<BigInt> digit(free_pos.size(), 0);
  BigInt value = 0;
  const BigInt& lim = limit.big();
  while (value <= lim) {
    out.emplace_back(value);
    std::size_t k = 0;
    for (; k < free_pos.size(); ++k) {
      const std::size_t j = free_pos[k];
      if (digit[k] + 1 < spec.m(j + 1).big()) {
        ++digit[k];
        value += spec.place(j).big();
        break;
      }
      value -= digit[k] * spec.place(j).big();
      digit[k] = 0;
    }
    if (k == free_pos.size()) break;  // odometer wrapped past P_n
  }
  return IntSet(std::move(out), limit);
}

std::pair<IntSet, IntSet> mixed_radix_pair(const MixedRadixSpec& spec, const Nat& limit) {
  return {mixed_radix_side(spec, Parity::Even, limit), mixed_radix_side(spec, Parity::Odd, limit)};
}

MixedRadixSpec extend_spec(const MixedRadixSpec& spec, const GrowthRule& rule, const Nat& target) {
  MixedRadixSpec out = spec;
  while (out.top() <= target) out = out.appended(next_modulus(out, rule));
  return out;
}

MixedRadixSpec extend_to_length(const MixedRadixSpec& spec, const GrowthRule& rule, std::size_t count) {
  MixedRadixSpec out = spec;
  while (out.size() < count) out = out.appended(next_modulus(out, rule));
  return out;
}

}  // namespace disjoint
