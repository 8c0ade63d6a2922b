#pragma once

// JSON and CSV formats. Big integers always travel as decimal strings.

#include "disjoint/analysis.hpp"
#include "disjoint/constructions.hpp"
#include "disjoint/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace disjoint {

using Json = nlohmann::ordered_json;

Json to_json(const Nat& n);
Nat nat_from_json(const Json& j);

/// {"num": "...", "den": "..."}
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"limit": "<decimal>", "elems": ["<decimal>", ...]}
Json to_json(const IntSet& s);
/// Validates strict sortedness and the limit; throws std::invalid_argument.
IntSet intset_from_json(const Json& j);

/// {"moduli": ["<decimal>", ...]}
Json to_json(const MixedRadixSpec& spec);
MixedRadixSpec spec_from_json(const Json& j);

struct PairFile {
  std::string family;
  std::optional<MixedRadixSpec> spec;
  IntSet a;
  IntSet b;
};

Json to_json(const PairFile& p);
PairFile pair_from_json(const Json& j);

Json to_json(const FitResult& fit);

/// {"n", "objective", "value", "optimal", "witnesses": [{"A": IntSet, "B": IntSet}...]}
/// plus "stats" when requested; node counts depend on worker timing.
Json to_json(const SearchProblem& p, const SearchResult& r, bool with_stats);

/// x,countA,countB,product_ratio_num,product_ratio_den,in_ratio
std::string profile_csv(const PairProfile& p);
std::string scan_csv(const std::vector<AnchorScan>& scans);
/// family,two_minus_sp_num,two_minus_sp_den,in,quotient
std::string frontier_csv(const std::vector<FrontierRow>& rows);

/// in_ratio and quotient rendering: fixed point, 15 decimals.
inline constexpr int kRealDecimals = 15;

}  // namespace disjoint
