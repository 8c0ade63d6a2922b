#pragma once

#include "disjoint/mixed_radix.hpp"
#include "disjoint/numbase.hpp"

#include <string>
#include <variant>

namespace disjoint {

/// A disjoint pair known either as two explicit sets or as a mixed-radix spec.
/// Spec-backed pairs count through the digit DP and never materialize.
class PairSource {
 public:
  PairSource(IntSet a, IntSet b);
  explicit PairSource(MixedRadixSpec spec);

  bool spec_backed() const noexcept { return std::holds_alternative<MixedRadixSpec>(data_); }
  const MixedRadixSpec* spec() const noexcept { return std::get_if<MixedRadixSpec>(&data_); }

  /// Largest x on which both counting functions are certified.
  Nat certified_limit() const;

  /// A(x) or B(x); throws UncertifiedRegion past certified_limit().
  Nat count(Side side, const Nat& x) const;

  /// Elements of one side inside [lo, hi].
  std::vector<Nat> elements_in(Side side, const Nat& lo, const Nat& hi) const;

 private:
  using Sets = std::pair<IntSet, IntSet>;
  std::variant<Sets, MixedRadixSpec> data_;
};

}  // namespace disjoint
