#include "disjoint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <stdexcept>
#include <thread>

namespace disjoint {

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::MaxProduct: return "MAX_PRODUCT";
    case Objective::MaxMin: return "MAX_MIN";
    case Objective::MaxSum: return "MAX_SUM";
  }
  return "?";
}

Objective parse_objective(std::string_view s) {
  if (s == "product" || s == "MAX_PRODUCT") return Objective::MaxProduct;
  if (s == "min" || s == "MAX_MIN") return Objective::MaxMin;
  if (s == "sum" || s == "MAX_SUM") return Objective::MaxSum;
  throw std::invalid_argument("unknown objective '" + std::string(s) + "' (expected product, min or sum)");
}

std::uint64_t objective_value(Objective o, std::size_t size_a, std::size_t size_b) {
  switch (o) {
    case Objective::MaxProduct: return std::uint64_t{size_a} * size_b;
    case Objective::MaxMin: return std::min(size_a, size_b);
    case Objective::MaxSum: return std::uint64_t{size_a} + size_b;
  }
  return 0;
}

WitnessPair canonical_form(WitnessPair w) {
  auto shift = [](std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    if (v.empty()) return;
    const auto lo = v.front();
    for (auto& e : v) e -= lo;
  };
  shift(w.a);
  shift(w.b);
  if (w.b < w.a) std::swap(w.a, w.b);
  return w;
}

IntSet to_intset(const std::vector<std::uint32_t>& v, std::size_t n) {
  std::vector<Nat> elems(v.begin(), v.end());
  return IntSet(std::move(elems), Nat(n));
}

namespace {

// Optimal value plus the lexicographically smallest canonical witnesses at that value.
class WitnessKeeper {
 public:
  explicit WitnessKeeper(std::size_t limit) : limit_(std::max<std::size_t>(limit, 1)) {}

  bool has_value() const { return any_; }
  std::uint64_t best() const { return best_; }
  const std::vector<WitnessPair>& witnesses() const { return kept_; }

  void offer(std::uint64_t value, WitnessPair w) {
    if (!any_ || value > best_) {
      any_ = true;
      best_ = value;
      kept_.clear();
    } else if (value < best_) {
      return;
    }
    w = canonical_form(std::move(w));
    auto it = std::lower_bound(kept_.begin(), kept_.end(), w);
    if (it != kept_.end() && *it == w) return;
    if (kept_.size() == limit_ && it == kept_.end()) return;
    kept_.insert(it, std::move(w));
    if (kept_.size() > limit_) kept_.pop_back();
  }

  void merge(const WitnessKeeper& other) {
    if (!other.any_) return;
    for (const auto& w : other.kept_) offer(other.best_, w);
  }

 private:
  std::size_t limit_;
  bool any_ = false;
  std::uint64_t best_ = 0;
  std::vector<WitnessPair> kept_;
};

// ---------------------------------------------------------------------------
// Exhaustive oracle: plain vectors, differences recomputed per insertion.

struct NaivePair {
  std::vector<std::uint32_t> a, b;
  std::vector<char> da, db;  // da[d] != 0 iff d in A - A, d > 0
};

bool naive_add(std::vector<std::uint32_t>& side, std::vector<char>& own, const std::vector<char>& other,
               std::uint32_t e) {
  for (auto s : side) {
    if (other[e - s]) return false;
  }
  for (auto s : side) own[e - s] = 1;
  side.push_back(e);
  return true;
}

class Exhaustive {
 public:
  Exhaustive(const SearchProblem& p) : p_(p), keeper_(p.options.witness_limit) {}

  void run_canonical() {
    NaivePair s;
    s.a = {0};
    s.b = {0};
    s.da.assign(p_.n + 1, 0);
    s.db.assign(p_.n + 1, 0);
    canonical(s, 1);
  }

  void run_raw() {
    NaivePair s;
    s.da.assign(p_.n + 1, 0);
    s.db.assign(p_.n + 1, 0);
    raw(s, 0);
  }

  SearchResult result() const {
    SearchResult r;
    r.best_value = keeper_.best();
    r.witnesses = keeper_.witnesses();
    r.optimal = true;
    r.stats = stats_;
    return r;
  }

 private:
  void leaf(const NaivePair& s) {
    keeper_.offer(objective_value(p_.objective, s.a.size(), s.b.size()), WitnessPair{s.a, s.b});
  }

  void canonical(const NaivePair& s, std::uint32_t e) {
    ++stats_.nodes;
    if (e > p_.n) return leaf(s);
    {
      NaivePair t = s;
      if (naive_add(t.a, t.da, t.db, e)) canonical(t, e + 1); else ++stats_.conflict_prunes;
    }
    {
      NaivePair t = s;
      if (naive_add(t.b, t.db, t.da, e)) canonical(t, e + 1); else ++stats_.conflict_prunes;
    }
    canonical(s, e + 1);
  }

  void raw(const NaivePair& s, std::uint32_t e) {
    ++stats_.nodes;
    if (e > p_.n) {
      if (!s.a.empty() || !s.b.empty()) leaf(s);
      return;
    }
    for (int choice = 0; choice < 4; ++choice) {
      NaivePair t = s;
      bool ok = true;
      if (choice & 1) ok = naive_add(t.a, t.da, t.db, e);
      if (ok && (choice & 2)) ok = naive_add(t.b, t.db, t.da, e);
      if (ok) raw(t, e + 1); else ++stats_.conflict_prunes;
    }
  }

  const SearchProblem& p_;
  WitnessKeeper keeper_;
  SearchStats stats_;
};

// ---------------------------------------------------------------------------
// Branch and bound over bitmaps.

constexpr std::size_t kTop = kBranchBoundMaxN;
using Bits = std::bitset<kTop + 1>;

struct BnbState {
  Bits a_rev;  // bit kTop - a for every a in A
  Bits b_rev;
  Bits da;  // positive differences of A
  Bits db;
  std::vector<std::uint32_t> a{0};
  std::vector<std::uint32_t> b{0};
  std::uint32_t next = 1;  // next undecided element

  BnbState() {
    a_rev.set(kTop);
    b_rev.set(kTop);
  }

  // Differences that adding e to the side would create.
  static Bits new_diffs(const Bits& rev, std::uint32_t e) { return rev >> (kTop - e); }

  bool can_add_a(std::uint32_t e) const { return (new_diffs(a_rev, e) & db).none(); }
  bool can_add_b(std::uint32_t e) const { return (new_diffs(b_rev, e) & da).none(); }
};

std::uint64_t capacity_bound(Objective o, std::size_t n, std::size_t a_lo, std::size_t a_hi, std::size_t b_lo,
                             std::size_t b_hi, std::size_t shared) {
  // Each side of size s has at least s-1 distinct positive differences, and the
  // two difference sets are disjoint inside [1, n].
  const std::size_t total_cap = std::min(a_hi + b_hi - shared, n + 2);
  std::uint64_t best = 0;
  for (std::size_t a = a_lo; a <= a_hi; ++a) {
    if (a > total_cap) break;
    const std::size_t b = std::min(b_hi, total_cap - a);
    if (b < b_lo) continue;
    best = std::max(best, objective_value(o, a, b));
  }
  if (o == Objective::MaxProduct) best = std::min<std::uint64_t>(best, 2 * std::uint64_t{n} + 1);
  return best;
}

class BnbWorker {
 public:
  BnbWorker(const SearchProblem& p, std::atomic<std::uint64_t>& incumbent)
      : p_(p), incumbent_(incumbent), keeper_(p.options.witness_limit) {}

  void explore(BnbState s) { dfs(s); }

  bool aborted() const { return aborted_; }
  const WitnessKeeper& keeper() const { return keeper_; }
  const SearchStats& stats() const { return stats_; }

 private:
  std::uint64_t bound(const BnbState& s) const {
    std::size_t only_a = 0, only_b = 0, both = 0;
    for (std::uint32_t f = s.next; f <= p_.n; ++f) {
      const bool ca = s.can_add_a(f);
      const bool cb = s.can_add_b(f);
      both += ca && cb;
      only_a += ca && !cb;
      only_b += cb && !ca;
    }
    return capacity_bound(p_.objective, p_.n, s.a.size(), s.a.size() + only_a + both, s.b.size(),
                          s.b.size() + only_b + both, both);
  }

  void publish(std::uint64_t v) {
    std::uint64_t cur = incumbent_.load(std::memory_order_relaxed);
    while (v > cur && !incumbent_.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
  }

  void dfs(BnbState& s) {
    if (aborted_) return;
    if ((++stats_.nodes & 0xFFF) == 0 && p_.options.stop.stop_requested()) {
      aborted_ = true;
      return;
    }
    if (s.next > p_.n) {
      const auto v = objective_value(p_.objective, s.a.size(), s.b.size());
      keeper_.offer(v, WitnessPair{s.a, s.b});
      publish(v);
      return;
    }
    if (bound(s) < incumbent_.load(std::memory_order_relaxed)) {
      ++stats_.bound_prunes;
      return;
    }
    const std::uint32_t e = s.next;
    ++s.next;
    if (s.can_add_a(e)) {
      const Bits saved = s.da;
      s.da |= BnbState::new_diffs(s.a_rev, e);
      s.a_rev.set(kTop - e);
      s.a.push_back(e);
      dfs(s);
      s.a.pop_back();
      s.a_rev.reset(kTop - e);
      s.da = saved;
    } else {
      ++stats_.conflict_prunes;
    }
    if (s.can_add_b(e)) {
      const Bits saved = s.db;
      s.db |= BnbState::new_diffs(s.b_rev, e);
      s.b_rev.set(kTop - e);
      s.b.push_back(e);
      dfs(s);
      s.b.pop_back();
      s.b_rev.reset(kTop - e);
      s.db = saved;
    } else {
      ++stats_.conflict_prunes;
    }
    dfs(s);
    --s.next;
  }

  const SearchProblem& p_;
  std::atomic<std::uint64_t>& incumbent_;
  WitnessKeeper keeper_;
  SearchStats stats_;
  bool aborted_ = false;
};

// Feasible states after deciding elements 1..depth, in DFS order.
std::vector<BnbState> split_prefixes(std::size_t n, unsigned depth) {
  std::vector<BnbState> frontier{BnbState{}};
  const std::uint32_t last = static_cast<std::uint32_t>(std::min<std::size_t>(depth, n));
  for (std::uint32_t e = 1; e <= last; ++e) {
    std::vector<BnbState> next;
    for (const auto& s : frontier) {
      if (s.can_add_a(e)) {
        BnbState t = s;
        t.da |= BnbState::new_diffs(t.a_rev, e);
        t.a_rev.set(kTop - e);
        t.a.push_back(e);
        t.next = e + 1;
        next.push_back(std::move(t));
      }
      if (s.can_add_b(e)) {
        BnbState t = s;
        t.db |= BnbState::new_diffs(t.b_rev, e);
        t.b_rev.set(kTop - e);
        t.b.push_back(e);
        t.next = e + 1;
        next.push_back(std::move(t));
      }
      BnbState t = s;
      t.next = e + 1;
      next.push_back(std::move(t));
    }
    frontier = std::move(next);
  }
  return frontier;
}

std::uint64_t greedy_value(std::size_t n, Objective o, GreedyStrategy g) {
  auto [a, b] = greedy_pair(n, g);
  return objective_value(o, a.size(), b.size());
}

}  // namespace

SearchResult exhaustive_search(const SearchProblem& p) {
  const std::size_t cap = p.options.canonicalize ? kExhaustiveMaxN : kRawExhaustiveMaxN;
  if (p.n > cap) {
    throw std::invalid_argument("exhaustive_search: n=" + std::to_string(p.n) + " exceeds the cap of " +
                                std::to_string(cap) + "; use branch_and_bound");
  }
  Exhaustive ex(p);
  if (p.options.canonicalize) ex.run_canonical(); else ex.run_raw();
  return ex.result();
}

SearchResult branch_and_bound(const SearchProblem& p) {
  if (p.n > kBranchBoundMaxN) {
    throw std::invalid_argument("branch_and_bound: n=" + std::to_string(p.n) + " exceeds " +
                                std::to_string(kBranchBoundMaxN));
  }
  std::atomic<std::uint64_t> incumbent{std::max(greedy_value(p.n, p.objective, GreedyStrategy::Alternate),
                                                greedy_value(p.n, p.objective, GreedyStrategy::ProductGain))};
  const auto tasks = split_prefixes(p.n, p.options.split_depth);
  const unsigned workers = std::max(1u, std::min<unsigned>(p.options.workers, static_cast<unsigned>(tasks.size())));

  std::vector<BnbWorker> pool_state;
  pool_state.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool_state.emplace_back(p, incumbent);
  std::atomic<std::size_t> next_task{0};
  auto drain = [&](BnbWorker& worker) {
    for (std::size_t i = next_task++; i < tasks.size(); i = next_task++) worker.explore(tasks[i]);
  };
  if (workers == 1) {
    drain(pool_state.front());
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&, w] { drain(pool_state[w]); });
  }

  // Greedy pairs lie in the searched space, so seeding them changes nothing when
  // the search completes and keeps a witness when it is stopped early.
  WitnessKeeper merged(p.options.witness_limit);
  for (auto g : {GreedyStrategy::Alternate, GreedyStrategy::ProductGain}) {
    auto [ga, gb] = greedy_pair(p.n, g);
    WitnessPair w;
    for (auto v : ga.to_u64()) w.a.push_back(static_cast<std::uint32_t>(v));
    for (auto v : gb.to_u64()) w.b.push_back(static_cast<std::uint32_t>(v));
    const auto v = objective_value(p.objective, w.a.size(), w.b.size());
    merged.offer(v, std::move(w));
  }
  SearchResult r;
  r.optimal = true;
  r.stats.subtrees = tasks.size();
  for (const auto& w : pool_state) {
    merged.merge(w.keeper());
    r.stats.nodes += w.stats().nodes;
    r.stats.bound_prunes += w.stats().bound_prunes;
    r.stats.conflict_prunes += w.stats().conflict_prunes;
    r.optimal = r.optimal && !w.aborted();
  }
  r.best_value = merged.best();
  r.witnesses = merged.witnesses();
  return r;
}

std::pair<IntSet, IntSet> greedy_pair(std::size_t n, GreedyStrategy strategy) {
  std::vector<std::uint32_t> a{0}, b{0};
  std::vector<char> da(n + 1, 0), db(n + 1, 0);
  for (std::uint32_t e = 1; e <= n; ++e) {
    bool prefer_a = true;
    if (strategy == GreedyStrategy::Alternate) {
      prefer_a = e % 2 == 1;
    } else {
      // Adding to the smaller side raises |A||B| by more; ties go to A.
      prefer_a = a.size() <= b.size();
    }
    if (prefer_a) {
      if (!naive_add(a, da, db, e)) naive_add(b, db, da, e);
    } else {
      if (!naive_add(b, db, da, e)) naive_add(a, da, db, e);
    }
  }
  return {to_intset(a, n), to_intset(b, n)};
}

}  // namespace disjoint
