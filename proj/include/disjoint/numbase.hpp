#pragma once

// Finite integer sets, their difference sets, and the exact finite
// inequalities every disjoint pair has to satisfy.

#include "disjoint/errors.hpp"
#include "disjoint/nat.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace disjoint {

enum class Side { A, B };

/// Strictly increasing list of naturals, certified complete on [0, limit].
class IntSet {
 public:
  IntSet() = default;
  /// Throws std::invalid_argument unless `elems` is strictly increasing with max <= limit.
  IntSet(std::vector<Nat> elems, Nat limit);

  const std::vector<Nat>& elems() const noexcept { return elems_; }
  const Nat& limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(const Nat& x) const;

  /// Same set with a smaller certified limit (elements above it are dropped).
  IntSet truncated(const Nat& new_limit) const;

  /// Elements as 64-bit values; throws std::overflow_error if any does not fit.
  std::vector<std::uint64_t> to_u64() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<Nat> elems_;
  Nat limit_{0};
};

/// Membership bitmap over [0, limit] of the nonnegative differences of a set.
struct DiffSet {
  std::uint64_t limit = 0;
  boost::dynamic_bitset<> present;  // empty bitmap for the empty source set

  bool contains(std::uint64_t d) const { return d < present.size() && present.test(d); }
  std::size_t count() const { return present.count(); }
  /// Number of present differences in [1, x].
  std::size_t count_positive_up_to(std::uint64_t x) const;
  std::vector<std::uint64_t> values() const;
};

// Materialized bitmaps are only built below this bound; larger sets go through
// sorted difference lists or the digit DP in mixed_radix.
inline constexpr std::uint64_t kBitmapCap = std::uint64_t{1} << 31;

/// |{s in S : s <= x}|. Throws UncertifiedRegion if x > S.limit().
Nat count_up_to(const IntSet& s, const Nat& x);

/// Throws std::length_error if max(S) exceeds kBitmapCap.
DiffSet difference_set(const IntSet& s);

bool is_sidon(const IntSet& s);
bool is_sidon(std::span<const std::uint64_t> sorted);

/// (A-A) ∩ (B-B) = {0}. Empty sides are disjoint from everything.
bool are_disjoint(const IntSet& a, const IntSet& b);

/// Smallest nonzero difference shared by A and B, if any.
std::optional<Nat> first_shared_difference(const IntSet& a, const IntSet& b);

/// |{a+b in [0,2x] : a in A, b in B, a,b <= x}|.
Nat sum_coverage(const IntSet& a, const IntSet& b, const Nat& x);

struct BoundsReport {
  Nat x;
  Nat count_a;
  Nat count_b;
  bool disjoint = true;
  std::optional<Nat> shared_difference;

  // A(x)B(x) <= 2x + 1
  bool product_ok = true;
  BigInt product_margin;  // (2x+1) - A(x)B(x), negative on violation

  // distinct positive differences of A∩[0,x] and B∩[0,x] inside [1,x] sum to <= x
  bool packing_ok = true;
  std::uint64_t diffs_a = 0;
  std::uint64_t diffs_b = 0;
  BigInt packing_margin;

  // C(A(x),2) + C(B(x),2) <= x, only evaluated when both restricted sets are Sidon
  std::optional<bool> binomial_ok;

  bool ok() const { return disjoint && product_ok && packing_ok && binomial_ok.value_or(true); }
  /// Name of the first failing inequality, empty when ok().
  std::string violation() const;
};

/// Evaluates the product and packing inequalities at x. Never throws on a
/// non-disjoint input; the report names what failed instead.
BoundsReport pair_bounds_check(const IntSet& a, const IntSet& b, const Nat& x);

}  // namespace disjoint
