#pragma once

#include "disjoint/mixed_radix.hpp"

#include <span>
#include <utility>
#include <vector>

namespace disjoint {

/// A = naturals with binary 1-bits only at even indices, B = only at odd indices.
std::pair<IntSet, IntSet> powers_of_two_pair(const Nat& limit);

/// Base-k digit split; identical to mixed_radix_pair with every modulus k.
std::pair<IntSet, IntSet> uniform_base_pair(const Nat& k, const Nat& limit);

/// Shortest uniform spec (k, ..., k) whose top place exceeds `limit`.
MixedRadixSpec uniform_spec_covering(const Nat& k, const Nat& limit);

/// N_k = (m_1 - 1) + (m_3 - 1) P_2 + ... + (m_{2k-1} - 1) P_{2k-2}:
/// the largest A element using places below P_{2k-1}.
Nat n_k(const MixedRadixSpec& spec, std::size_t k);

struct WitnessPoint {
  std::size_t k = 0;
  Nat y;  // N_k + P_{2k}
  // closed forms
  Nat a_y;   // 2 m_1 m_3 ... m_{2k-1}
  Nat b_y;   // m_2 m_4 ... m_{2k}
  Nat a_2y;  // 3 m_1 m_3 ... m_{2k-1}
  Nat b_2y;  // m_2 m_4 ... m_{2k}
  // digit-DP counts at the same points
  Nat dp_a_y, dp_b_y, dp_a_2y, dp_b_2y;

  bool consistent() const { return a_y == dp_a_y && b_y == dp_b_y && a_2y == dp_a_2y && b_2y == dp_b_2y; }
  Rational ratio_y() const { return make_rational(a_y * b_y, y); }
  Rational ratio_2y() const { return make_rational(a_2y * b_2y, y + y); }
};

/// Requires at least 2k+1 moduli with m_{2k+1} >= 3 and 2 y_k < P_n; throws
/// ExtendSpecError otherwise.
WitnessPoint witness_y_sequence(const MixedRadixSpec& spec, std::size_t k);

/// Seed extended by the witness growth rule far enough for witness_y_sequence(., k).
MixedRadixSpec witness_spec(const MixedRadixSpec& seed, std::size_t k);

struct FitWindow {
  std::size_t k = 0;
  Nat target;
  Nat n_k;
  Nat p_2k;
  Nat lower;  // N_k + P_{2k}
  Nat upper;  // 2 P_{2k-1} + P_{2k}
  Nat m_2k;
  Rational bound;  // 2 / (1 + 2/m_{2k})
};

struct FitResult {
  MixedRadixSpec spec;  // exactly 2K moduli for K targets
  std::vector<FitWindow> windows;
};

/// Builds m_{2k-1} = 2 and m_{2k} = the largest integer of the admissible interval
/// for each target, so that every target lands inside its window. Throws
/// InfeasibleTarget naming the first target that cannot be placed.
FitResult fit_moduli(std::span<const Nat> targets);

/// The fitted spec continued with (2, 2) so counts are defined on every window.
MixedRadixSpec fit_counting_spec(const FitResult& fit);

}  // namespace disjoint
