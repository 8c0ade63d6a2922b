#pragma once

// Mixed-radix digit systems and the parity split into a disjoint pair.
//
// With moduli (m_1, ..., m_n) every n < P_n = m_1...m_n has a unique expansion
// n = sum_j d_j P_j, P_0 = 1, P_j = m_1...m_j, 0 <= d_j < m_{j+1}. The A side
// keeps numbers whose odd-position digits vanish, the B side numbers whose
// even-position digits vanish; uniqueness of the expansion makes a+b injective.

#include "disjoint/errors.hpp"
#include "disjoint/nat.hpp"
#include "disjoint/numbase.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace disjoint {

enum class Parity { Even, Odd };

inline Side side_of(Parity p) { return p == Parity::Even ? Side::A : Side::B; }
inline Parity parity_of(Side s) { return s == Side::A ? Parity::Even : Parity::Odd; }

class MixedRadixSpec {
 public:
  /// Throws std::invalid_argument if empty or any modulus < 2.
  explicit MixedRadixSpec(std::vector<Nat> moduli);

  /// n copies of k.
  static MixedRadixSpec uniform(const Nat& k, std::size_t n);

  const std::vector<Nat>& moduli() const noexcept { return moduli_; }
  std::size_t size() const noexcept { return moduli_.size(); }
  /// m_i, 1-based as in the digit-system notation.
  const Nat& m(std::size_t i) const { return moduli_.at(i - 1); }
  /// P_j = m_1 ... m_j, j in [0, size()].
  const Nat& place(std::size_t j) const { return places_.at(j); }
  const Nat& top() const noexcept { return places_.back(); }

  /// Digits d_0..d_{n-1} of x; throws ExtendSpecError if x >= P_n.
  std::vector<Nat> digits(const Nat& x) const;

  MixedRadixSpec appended(const Nat& m) const;

  friend bool operator==(const MixedRadixSpec& a, const MixedRadixSpec& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<Nat> moduli_;
  std::vector<Nat> places_;
};

/// Number of n <= x in the parity-restricted digit set, by a most-significant-first
/// digit DP. Throws ExtendSpecError if x >= P_n.
Nat mixed_radix_count(const MixedRadixSpec& spec, Parity parity, const Nat& x);

/// The parity-restricted digit set on [0, limit], enumerated in increasing order
/// by an odometer over the free digits (cost proportional to output size).
IntSet mixed_radix_side(const MixedRadixSpec& spec, Parity parity, const Nat& limit);

/// (A, B) on [0, limit]; throws ExtendSpecError if limit >= P_n.
std::pair<IntSet, IntSet> mixed_radix_pair(const MixedRadixSpec& spec, const Nat& limit);

/// m_{i+1} = max(i * m_i, 2).
struct WitnessGrowth {};
/// m_{i+1} = modulus.
struct ConstantGrowth {
  Nat modulus;
};
using GrowthRule = std::variant<WitnessGrowth, ConstantGrowth>;

/// Appends moduli by `rule` until P_n > target. The existing prefix is unchanged.
MixedRadixSpec extend_spec(const MixedRadixSpec& spec, const GrowthRule& rule, const Nat& target);

/// Appends moduli by `rule` until the spec has at least `count` moduli.
MixedRadixSpec extend_to_length(const MixedRadixSpec& spec, const GrowthRule& rule, std::size_t count);

}  // namespace disjoint
