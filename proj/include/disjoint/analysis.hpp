#pragma once

// Finite-scale profiles of A(x)B(x)/x and min(A(x),B(x))/sqrt(x), scans around
// anchor points, and exact checks of the closed-form (SP, IN) inequalities.

#include "disjoint/constructions.hpp"
#include "disjoint/pair_source.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace disjoint {

struct ProfileRow {
  Nat x;
  Nat count_a;
  Nat count_b;
  Rational product_ratio;  // count_a * count_b / x
  Real in_ratio;           // min(count_a, count_b) / sqrt(x)
};

struct PairProfile {
  std::vector<ProfileRow> rows;
};

/// One row per grid point. The grid must be strictly increasing, start at
/// x >= 1, and stay inside the certified region (UncertifiedRegion otherwise).
/// Rows are independent; `workers` > 1 splits them across threads.
PairProfile profile(const PairSource& pair, std::span<const Nat> grid, unsigned workers = 1);

ProfileRow profile_row(const PairSource& pair, const Nat& x);

/// floor(start * ratio^i) for i = 0, 1, ..., deduplicated, with `end` appended.
std::vector<Nat> geometric_grid(const Nat& start, const Nat& end, double ratio = 1.05);

/// Every element e of A ∪ B in [lo, hi] contributes e - 1 and e, plus hi itself.
/// Ratios only move at elements, so the extremes over [lo, hi] sit on this grid.
std::vector<Nat> jump_grid(const PairSource& pair, const Nat& lo, const Nat& hi);

/// {y_k} ∪ {2 y_k} for k = 1..kmax.
std::vector<Nat> witness_grid(const MixedRadixSpec& spec, std::size_t kmax);

/// max product_ratio: a finite-scale lower estimate of the limsup.
Rational sp_estimate(const PairProfile& p);

/// min in_ratio over rows with x >= tail_start: a finite-scale upper estimate of the
/// liminf. Throws std::invalid_argument if the tail is empty.
Real in_estimate(const PairProfile& p, const Nat& tail_start);

struct ScanRow {
  Rational c;
  Nat y;  // floor(c * x_n)
  Nat count_a;
  Nat count_b;
  Rational value;       // A(y)B(y)/y for c <= 1, A(y)B(y)/x_n for c > 1
  bool over_anchor;     // true when normalized by x_n
};

struct AnchorScan {
  Nat anchor;
  ProfileRow anchor_row;
  std::vector<ScanRow> rows;
  Rational half_a;  // A(floor(x_n/2)) / A(x_n)
  Rational half_b;  // B(floor(x_n/2)) / B(x_n)
};

/// c values must lie in (0, 2); a c that floors y to 0 is rejected.
AnchorScan anchor_scan(const PairSource& pair, const Nat& anchor, std::span<const Rational> c_grid);

struct IntervalMatrix {
  Nat x;
  std::size_t parts = 0;
  Rational span;
  std::vector<Nat> bounds;  // b_0 = 0 < b_1 <= ... <= b_parts = floor(span * x)
  std::vector<Nat> a_parts; // |A ∩ (b_{i-1}, b_i]|
  std::vector<Nat> b_parts;
  std::vector<std::vector<Nat>> products;  // products[i][j] = a_parts[i] * b_parts[j]
  bool zero_in_a = false;
  bool zero_in_b = false;

  /// Sum of products over 1-based (i, j) index pairs.
  Nat ledger(std::span<const std::pair<std::size_t, std::size_t>> cells) const;
};

IntervalMatrix interval_matrix(const PairSource& pair, const Nat& x, std::size_t parts, const Rational& span);

/// Pairs of consecutive grid points (x_i, x_{i+1}) that both have product ratio at
/// least `near_two` while x_{i+1}/x_i <= `ratio_bound`. Such pairs run against the
/// asymptotic pattern that SP≈2 points must spread out; this is an observation,
/// not a failure.
std::vector<std::pair<Nat, Nat>> bounded_ratio_flags(const PairProfile& p, const Rational& near_two,
                                                     const Rational& ratio_bound);

enum class Provenance { ClosedForm, Estimated };

struct SpInPoint {
  std::string family;
  Rational sp;
  Rational in2;  // IN squared
  Provenance provenance = Provenance::ClosedForm;
};

/// Closed-form base-k family: SP = 2(k+1)/(k+2), IN^2 = 1/k.
SpInPoint base_k_point(std::uint64_t k);

/// Finite-scale estimate at x: sp = A(x)B(x)/x, in^2 = min(A(x),B(x))^2 / x.
SpInPoint finite_point(std::string family, const Nat& count_a, const Nat& count_b, const Nat& x);

/// Closed-form points must satisfy 0 <= sp <= 2 and 0 <= in^2 <= 1.
void validate(const SpInPoint& p);

struct InequalityReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool advisory = false;  // inputs were finite-scale estimates
};

/// IN^6 / (IN^2 + 8) <= 64 (2 - SP), exactly.
InequalityReport refined_bound_check(const SpInPoint& p);

/// IN^6 <= 2^6 3^2 (2 - SP), the radical-free sixth power of IN <= 2 3^{1/3} (2-SP)^{1/6}.
InequalityReport simple_bound_check(const SpInPoint& p);

struct FrontierRow {
  std::string family;
  Rational two_minus_sp;
  Real in;
  std::optional<Real> quotient;  // in / sqrt(2 - sp); nullopt when 2 - sp <= 0 and in > 0
};

/// Quotient is 0 by convention at sp = 2, in = 0.
std::vector<FrontierRow> frontier(std::span<const SpInPoint> points);

}  // namespace disjoint
