#include "disjoint/pair_source.hpp"

#include <algorithm>

namespace disjoint {

PairSource::PairSource(IntSet a, IntSet b) : data_(Sets{std::move(a), std::move(b)}) {}

PairSource::PairSource(MixedRadixSpec spec) : data_(std::move(spec)) {}

Nat PairSource::certified_limit() const {
  if (const auto* s = spec()) return s->top() - Nat(1);
  const auto& sets = std::get<Sets>(data_);
  return std::min(sets.first.limit(), sets.second.limit());
}

Nat PairSource::count(Side side, const Nat& x) const {
  if (x > certified_limit()) {
    throw UncertifiedRegion("count: x=" + x.to_string() + " beyond certified limit " +
                            certified_limit().to_string());
  }
  if (const auto* s = spec()) return mixed_radix_count(*s, parity_of(side), x);
  const auto& sets = std::get<Sets>(data_);
  return count_up_to(side == Side::A ? sets.first : sets.second, x);
}

std::vector<Nat> PairSource::elements_in(Side side, const Nat& lo, const Nat& hi) const {
  if (hi > certified_limit()) throw UncertifiedRegion("elements_in: range beyond certified limit");
  std::vector<Nat> all;
  if (const auto* s = spec()) {
    all = mixed_radix_side(*s, parity_of(side), hi).elems();
  } else {
    const auto& sets = std::get<Sets>(data_);
    all = (side == Side::A ? sets.first : sets.second).elems();
  }
  std::vector<Nat> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const Nat& e) { return lo <= e && e <= hi; });
  return out;
}

}  // namespace disjoint
