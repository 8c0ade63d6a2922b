#pragma once

// Extremal search over disjoint pairs inside [0, n].
//
// Both sides are translated to contain 0 (translation preserves disjointness and
// sizes), so 0 is shared and every e in [1, n] goes to A, B or neither; putting
// e > 0 on both sides would repeat the difference e. Witnesses are reported with
// A <= B lexicographically.

#include "disjoint/numbase.hpp"

#include <compare>
#include <cstdint>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace disjoint {

enum class Objective { MaxProduct, MaxMin, MaxSum };

std::string_view to_string(Objective o);
/// Accepts "product", "min", "sum" (and the MAX_* spellings).
Objective parse_objective(std::string_view s);

std::uint64_t objective_value(Objective o, std::size_t size_a, std::size_t size_b);

struct SearchOptions {
  bool canonicalize = true;  // exhaustive_search only; off walks the raw pair space
  unsigned workers = 1;
  unsigned split_depth = 3;
  std::size_t witness_limit = 16;  // keep the lexicographically smallest optimal witnesses
  std::stop_token stop;
};

struct SearchProblem {
  std::size_t n = 0;
  Objective objective = Objective::MaxProduct;
  SearchOptions options;
};

struct WitnessPair {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;

  friend auto operator<=>(const WitnessPair&, const WitnessPair&) = default;
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

/// Translate each side to minimum 0 and order the sides.
WitnessPair canonical_form(WitnessPair w);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t conflict_prunes = 0;
  std::uint64_t subtrees = 0;
};

struct SearchResult {
  std::uint64_t best_value = 0;
  std::vector<WitnessPair> witnesses;  // sorted, at most witness_limit
  bool optimal = false;
  SearchStats stats;
};

inline constexpr std::size_t kExhaustiveMaxN = 26;
inline constexpr std::size_t kRawExhaustiveMaxN = 10;
inline constexpr std::size_t kBranchBoundMaxN = 127;

/// Feasibility-only enumeration, used as the oracle for branch_and_bound.
/// Throws std::invalid_argument above kExhaustiveMaxN (kRawExhaustiveMaxN when
/// canonicalization is off).
SearchResult exhaustive_search(const SearchProblem& p);

/// Depth-first search with difference bitmaps and capacity bounds; subtrees below
/// `split_depth` are shared between workers. Always searches canonical forms.
SearchResult branch_and_bound(const SearchProblem& p);

enum class GreedyStrategy { Alternate, ProductGain };

std::pair<IntSet, IntSet> greedy_pair(std::size_t n, GreedyStrategy strategy);

IntSet to_intset(const std::vector<std::uint32_t>& v, std::size_t n);

}  // namespace disjoint
