// Acceptance suite. One line per criterion; exit status is the number of failures.

#include "disjoint/analysis.hpp"
#include "disjoint/constructions.hpp"
#include "disjoint/errors.hpp"
#include "disjoint/pair_source.hpp"
#include "disjoint/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace disjoint;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Independent digit enumeration: every sum of d_j P_j with d_j nonzero only at
// places of the requested parity, up to limit.
std::vector<std::uint64_t> side_by_digits(const std::vector<std::uint64_t>& mods, bool even, std::uint64_t limit) {
  std::vector<std::uint64_t> out{0};
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < mods.size(); ++j) {
    if ((j % 2 == 0) == even) {
      const std::size_t base = out.size();
      for (std::uint64_t d = 1; d < mods[j]; ++d) {
        for (std::size_t i = 0; i < base; ++i) {
          const std::uint64_t v = out[i] + d * place;
          if (v <= limit) out.push_back(v);
        }
      }
    }
    if (place > limit) break;
    place *= mods[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_le(const std::vector<std::uint64_t>& s, std::uint64_t x) {
  return static_cast<std::uint64_t>(std::upper_bound(s.begin(), s.end(), x) - s.begin());
}

std::vector<std::uint64_t> u64_moduli(const MixedRadixSpec& s) {
  std::vector<std::uint64_t> out;
  for (const auto& m : s.moduli()) out.push_back(m.to_u64());
  return out;
}

// Random disjoint pair in [0, n]: each element in random order goes to A, B or
// nowhere, keeping A-A and B-B apart.
std::pair<IntSet, IntSet> random_greedy_pair(std::mt19937_64& rng, std::uint64_t n) {
  std::vector<std::uint64_t> order(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> da(n + 1, 0), db(n + 1, 0);
  da[0] = db[0] = 1;
  std::vector<std::uint64_t> a, b;
  auto fits = [&](const std::vector<std::uint64_t>& s, const std::vector<char>& other, std::uint64_t e) {
    for (auto v : s) {
      const auto d = v > e ? v - e : e - v;
      if (d == 0 || other[d]) return false;
    }
    return true;
  };
  auto add = [&](std::vector<std::uint64_t>& s, std::vector<char>& own, std::uint64_t e) {
    for (auto v : s) own[v > e ? v - e : e - v] = 1;
    s.push_back(e);
  };
  for (auto e : order) {
    switch (rng() % 3) {
      case 0:
        if (fits(a, db, e)) add(a, da, e);
        break;
      case 1:
        if (fits(b, da, e)) add(b, db, e);
        break;
      default:
        break;
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Nat> na(a.begin(), a.end()), nb(b.begin(), b.end());
  return {IntSet(std::move(na), Nat(n)), IntSet(std::move(nb), Nat(n))};
}

MixedRadixSpec random_spec(std::mt19937_64& rng, std::uint64_t max_top) {
  std::vector<Nat> mods;
  std::uint64_t top = 1;
  for (;;) {
    const std::uint64_t m = 2 + rng() % 7;
    if (top * m > max_top) break;
    top *= m;
    mods.emplace_back(m);
  }
  if (mods.empty()) mods.emplace_back(2);
  return MixedRadixSpec(std::move(mods));
}

// ---------------------------------------------------------------------------

Outcome c1_disjointness() {
  const Nat limit(1'000'000);
  std::vector<std::pair<std::string, std::pair<IntSet, IntSet>>> fams;
  fams.emplace_back("pow2", powers_of_two_pair(limit));
  for (int k = 2; k <= 9; ++k) fams.emplace_back("base-" + std::to_string(k), uniform_base_pair(Nat(k), limit));
  const auto mixed = extend_spec(MixedRadixSpec({2, 2, 4, 12}), WitnessGrowth{}, limit);
  fams.emplace_back("mixed", mixed_radix_pair(mixed, limit));
  const auto mixed3 = extend_spec(MixedRadixSpec({2, 2, 4, 12}), ConstantGrowth{Nat(3)}, limit);
  fams.emplace_back("mixed+3", mixed_radix_pair(mixed3, limit));
  const std::vector<std::vector<Nat>> target_lists{{9, 100}, {9}, {100, 1000}, {50, 3000, 200000}, {10, 200, 5000}};
  for (const auto& t : target_lists) {
    const auto fit = fit_moduli(t);
    const auto spec = extend_spec(fit_counting_spec(fit), ConstantGrowth{Nat(2)}, limit);
    fams.emplace_back("fit", mixed_radix_pair(spec, limit));
  }
  for (const auto& [name, pr] : fams) {
    if (!are_disjoint(pr.first, pr.second)) return {false, name + " is not disjoint"};
  }
  return {true, std::to_string(fams.size()) + " families disjoint up to 10^6"};
}

Outcome c2_universal_bounds() {
  std::mt19937_64 rng(20240601);
  std::size_t checks = 0, violations = 0;
  for (int t = 0; t < 1000; ++t) {
    std::pair<IntSet, IntSet> pr;
    Nat limit;
    if (t % 2 == 0) {
      const auto spec = random_spec(rng, 200'000);
      limit = Nat(rng() % spec.top().to_u64());
      pr = mixed_radix_pair(spec, limit);
    } else {
      limit = Nat(1 + rng() % 300);
      pr = random_greedy_pair(rng, limit.to_u64());
    }
    const auto a = pr.first.to_u64(), b = pr.second.to_u64();
    for (int g = 0; g < 100; ++g) {
      const std::uint64_t x = rng() % (limit.to_u64() + 1);
      const auto r = pair_bounds_check(pr.first, pr.second, Nat(x));
      ++checks;
      // direct counts alongside the library report
      const auto ca = count_le(a, x), cb = count_le(b, x);
      if (!r.ok() || ca * cb > 2 * x + 1 || r.count_a != Nat(ca) || r.count_b != Nat(cb) ||
          r.diffs_a + r.diffs_b > x + 0) {
        ++violations;
      }
    }
  }
  std::ostringstream os;
  os << checks << " checks, " << violations << " violations";
  return {violations == 0, os.str()};
}

Outcome c3_base_k_limits() {
  std::ostringstream os;
  bool pass = true;
  for (std::uint64_t k = 2; k <= 5; ++k) {
    std::uint64_t cap = 1;
    for (int i = 0; i < 12 && cap <= 10'000'000; ++i) cap *= k;
    cap = std::min<std::uint64_t>(cap, 10'000'000);
    std::uint64_t tail = 1;
    for (int i = 0; i < 6; ++i) tail *= k;
    const PairSource src(uniform_spec_covering(Nat(k), Nat(cap)));
    const auto grid = jump_grid(src, Nat(tail), Nat(cap));
    const auto prof = profile(src, grid);
    const double sp = static_cast<double>(sp_estimate(prof));
    const double in = static_cast<double>(in_estimate(prof, Nat(tail)));
    const double sp_ref = 2.0 * (k + 1) / (k + 2), in_ref = 1.0 / std::sqrt(double(k));
    const bool ok = std::abs(sp - sp_ref) <= 0.02 && std::abs(in - in_ref) <= 0.02;
    pass = pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "k=%llu sp=%.4f(%.4f) in=%.4f(%.4f)%s; ", static_cast<unsigned long long>(k), sp,
                  sp_ref, in, in_ref, ok ? "" : " FAIL");
    os << buf;
  }
  return {pass, os.str()};
}

Outcome c4_pow2_liminf() {
  const Nat top(std::uint64_t{1} << 24);
  const PairSource src(uniform_spec_covering(Nat(2), top));
  const Nat tail(std::uint64_t{1} << 12);
  const auto grid = jump_grid(src, tail, top);
  const auto prof = profile(src, grid);
  const double in = static_cast<double>(in_estimate(prof, tail));
  char buf[96];
  std::snprintf(buf, sizeof buf, "tail-min %.6f over %zu points in [2^12, 2^24]", in, grid.size());
  return {in >= 0.70 && in <= 0.72, buf};
}

Outcome c5_witness_identities() {
  std::ostringstream os;
  bool pass = true;
  double prev = 0;
  double last = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto spec = witness_spec(MixedRadixSpec({2, 2}), k);
    // growth rule, checked directly
    for (std::size_t i = 1; i < spec.size(); ++i) {
      const Nat want = std::max(Nat(i) * spec.m(i), Nat(2));
      if (spec.m(i + 1) != want) return {false, "spec does not follow the growth rule"};
    }
    Nat odd(1), even(1);
    for (std::size_t i = 1; i <= k; ++i) {
      odd *= spec.m(2 * i - 1);
      even *= spec.m(2 * i);
    }
    const auto w = witness_y_sequence(spec, k);
    const bool closed = w.a_y == Nat(2) * odd && w.b_y == even && w.a_2y == Nat(3) * odd && w.b_2y == even;
    bool enum_ok = true;
    std::string how = "dp";
    if (w.consistent() && spec.place(2 * k) <= Nat(10'000'000)) {
      const auto mods = u64_moduli(spec);
      const std::uint64_t y = w.y.to_u64();
      const auto a = side_by_digits(mods, true, 2 * y), b = side_by_digits(mods, false, 2 * y);
      enum_ok = Nat(count_le(a, y)) == w.a_y && Nat(count_le(b, y)) == w.b_y &&
                Nat(count_le(a, 2 * y)) == w.a_2y && Nat(count_le(b, 2 * y)) == w.b_2y;
      how = "dp+enum";
    }
    const double r = static_cast<double>(w.ratio_2y());
    const bool mono = r > prev && w.ratio_2y() < Rational(3, 2);
    pass = pass && closed && w.consistent() && enum_ok && mono;
    prev = r;
    last = r;
    char buf[128];
    std::snprintf(buf, sizeof buf, "k=%zu y=%s r(2y)=%.5f %s%s; ", k, w.y.to_string().c_str(), r, how.c_str(),
                  closed && w.consistent() && enum_ok && mono ? "" : " FAIL");
    os << buf;
  }
  const bool near = std::abs(last - 1.5) <= 0.01;
  pass = pass && near;
  return {pass, os.str()};
}

Outcome c6_window_ratio() {
  const auto spec = extend_to_length(MixedRadixSpec({2, 2, 4, 12}), WitnessGrowth{}, 5);
  const PairSource src(spec);
  const auto mods = u64_moduli(spec);
  const auto a = side_by_digits(mods, true, 224), b = side_by_digits(mods, false, 224);
  const Rational bound(12, 7);
  for (std::uint64_t x = 205; x <= 224; ++x) {
    const Nat ca = src.count(Side::A, Nat(x)), cb = src.count(Side::B, Nat(x));
    if (ca != Nat(count_le(a, x)) || cb != Nat(count_le(b, x))) return {false, "DP/enumeration mismatch"};
    const Rational r = make_rational(ca * cb, Nat(x));
    if (r < bound) return {false, "ratio below 12/7 at x=" + std::to_string(x)};
    if ((r == bound) != (x == 224)) return {false, "equality set wrong at x=" + std::to_string(x)};
  }
  return {true, "20 points, >= 12/7, equality only at 224"};
}

Outcome c7_fitting() {
  const std::vector<Nat> targets{9, 100};
  const auto fit = fit_moduli(targets);
  if (fit.spec != MixedRadixSpec({2, 4, 2, 5})) return {false, "unexpected moduli"};
  if (fit.windows.size() != 2 || fit.windows[0].lower != Nat(9) || fit.windows[0].upper != Nat(12) ||
      fit.windows[1].lower != Nat(89) || fit.windows[1].upper != Nat(112)) {
    return {false, "unexpected windows"};
  }
  const auto mods = u64_moduli(fit_counting_spec(fit));
  std::ostringstream os;
  os << "moduli (2,4,2,5), windows [9,12] [89,112]";
  for (const auto& w : fit.windows) {
    const std::uint64_t x = w.target.to_u64();
    const auto a = side_by_digits(mods, true, x), b = side_by_digits(mods, false, x);
    const Rational realized = make_rational(Nat(a.size() * b.size()), w.target);
    const Rational bound = Rational(2) / (Rational(1) + Rational(2) / Rational(w.m_2k.big()));
    if (w.target < w.lower || w.target > w.upper) return {false, "target outside its window"};
    if (w.bound != bound || realized < bound) return {false, "window bound not met at " + w.target.to_string()};
    os << "; x=" << x << " ratio " << realized << " >= " << bound;
  }
  try {
    fit_moduli(std::vector<Nat>{9, 10});
    return {false, "(9,10) accepted"};
  } catch (const InfeasibleTarget&) {
  }
  os << "; (9,10) infeasible";
  return {true, os.str()};
}

Outcome c8_dp_vs_enumeration() {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const auto spec = random_spec(rng, 1'000'000);
    const bool even = rng() % 2 == 0;
    const std::uint64_t top = spec.top().to_u64();
    const std::uint64_t x = rng() % top;
    const auto s = side_by_digits(u64_moduli(spec), even, top - 1);
    const Nat dp = mixed_radix_count(spec, even ? Parity::Even : Parity::Odd, Nat(x));
    if (dp != Nat(count_le(s, x))) return {false, "mismatch at instance " + std::to_string(t)};
  }
  return {true, "1000 instances agree"};
}

Outcome c9_search() {
  const Objective objs[] = {Objective::MaxProduct, Objective::MaxMin, Objective::MaxSum};
  for (std::size_t n = 0; n <= 12; ++n) {
    for (auto o : objs) {
      SearchProblem p;
      p.n = n;
      p.objective = o;
      const auto ex = exhaustive_search(p);
      const auto bb = branch_and_bound(p);
      if (ex.best_value != bb.best_value || ex.witnesses != bb.witnesses) {
        return {false, "mismatch at n=" + std::to_string(n) + " " + std::string(to_string(o))};
      }
      p.options.workers = 8;
      const auto bb8 = branch_and_bound(p);
      if (bb8.best_value != bb.best_value || bb8.witnesses != bb.witnesses) {
        return {false, "worker count changed the result at n=" + std::to_string(n)};
      }
    }
  }
  SearchProblem p4;
  p4.n = 4;
  p4.options.canonicalize = false;
  const auto raw = exhaustive_search(p4);
  p4.options.canonicalize = true;
  const auto bb = branch_and_bound(p4);
  if (raw.best_value != 8 || bb.best_value != 8) return {false, "n=4 MAX_PRODUCT is not 8"};
  return {true, "n<=12 x 3 objectives agree, 1 vs 8 workers identical, n=4 product 8"};
}

Outcome c10_inequalities() {
  using boost::multiprecision::abs;
  std::vector<SpInPoint> pts;
  for (std::uint64_t k = 2; k <= 100; ++k) {
    pts.push_back(base_k_point(k));
    const auto t3 = refined_bound_check(pts.back()), co = simple_bound_check(pts.back());
    if (!t3.holds || !co.holds) return {false, "inequality fails at k=" + std::to_string(k)};
  }
  const auto rows = frontier(pts);
  Real worst = 0;
  for (std::uint64_t k = 2; k <= 100; ++k) {
    const auto& row = rows[k - 2];
    if (!row.quotient) return {false, "missing quotient"};
    const Real want = boost::multiprecision::sqrt(Real(k + 2) / Real(2 * k));
    worst = std::max(worst, Real(abs(*row.quotient - want)));
  }
  std::ostringstream os;
  os << "k=2..100 exact, max quotient error " << static_cast<double>(worst);
  return {worst < Real(1e-12), os.str()};
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    double budget;  // seconds, 0 = none
    std::function<Outcome()> fn;
  };
  const Item items[] = {
      {1, "disjointness oracle", 30, c1_disjointness},
      {2, "universal bounds", 0, c2_universal_bounds},
      {3, "base-k limits", 60, c3_base_k_limits},
      {4, "powers-of-two liminf", 60, c4_pow2_liminf},
      {5, "witness identities", 0, c5_witness_identities},
      {6, "window ratio on [205,224]", 0, c6_window_ratio},
      {7, "modulus fitting", 0, c7_fitting},
      {8, "digit DP vs enumeration", 0, c8_dp_vs_enumeration},
      {9, "search correctness", 0, c9_search},
      {10, "inequality suite", 0, c10_inequalities},
  };
  int failures = 0;
  for (const auto& it : items) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = it.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    if (it.budget > 0 && secs > it.budget) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    std::printf("%s %2d %-28s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", it.id, it.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
