#include "disjoint/analysis.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace disjoint {

namespace {

Nat floor_real(const Real& r) { return Nat(boost::multiprecision::floor(r).convert_to<BigInt>()); }

Rational rational_ratio(const Nat& num, const Nat& den) {
  if (den.is_zero()) throw std::domain_error("ratio with zero denominator");
  return make_rational(num, den);
}

}  // namespace

ProfileRow profile_row(const PairSource& pair, const Nat& x) {
  if (x.is_zero()) throw std::invalid_argument("profile: x must be >= 1");
  ProfileRow row;
  row.x = x;
  row.count_a = pair.count(Side::A, x);
  row.count_b = pair.count(Side::B, x);
  row.product_ratio = make_rational(row.count_a * row.count_b, x);
  const Nat& lo = std::min(row.count_a, row.count_b);
  row.in_ratio = to_real(lo) / boost::multiprecision::sqrt(to_real(x));
  return row;
}

PairProfile profile(const PairSource& pair, std::span<const Nat> grid, unsigned workers) {
  const Nat limit = pair.certified_limit();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].is_zero()) throw std::invalid_argument("profile: grid points must be >= 1");
    if (i > 0 && !(grid[i - 1] < grid[i])) throw std::invalid_argument("profile: grid not strictly increasing");
    if (grid[i] > limit) {
      throw UncertifiedRegion("profile: grid point " + grid[i].to_string() + " beyond certified limit " +
                              limit.to_string());
    }
  }

  PairProfile out;
  out.rows.resize(grid.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(grid.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out.rows[i] = profile_row(pair, grid[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < grid.size(); i += workers) out.rows[i] = profile_row(pair, grid[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Nat> geometric_grid(const Nat& start, const Nat& end, double ratio) {
  if (start.is_zero()) throw std::invalid_argument("geometric_grid: start must be >= 1");
  if (end < start) throw std::invalid_argument("geometric_grid: end below start");
  if (!(ratio > 1.0)) throw std::invalid_argument("geometric_grid: ratio must exceed 1");
  std::vector<Nat> out;
  Real cur = to_real(start);
  const Real r(ratio);
  for (;;) {
    Nat x = floor_real(cur);
    if (x > end) break;
    if (out.empty() || out.back() < x) out.push_back(std::move(x));
    cur *= r;
  }
  if (out.back() < end) out.push_back(end);
  return out;
}

std::vector<Nat> jump_grid(const PairSource& pair, const Nat& lo, const Nat& hi) {
  if (lo.is_zero()) throw std::invalid_argument("jump_grid: lo must be >= 1");
  if (hi < lo) throw std::invalid_argument("jump_grid: hi below lo");
  std::vector<Nat> out{lo, hi};
  for (Side side : {Side::A, Side::B}) {
    for (Nat& e : pair.elements_in(side, lo, hi)) {
      if (lo < e) out.push_back(e - Nat(1));
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Nat> witness_grid(const MixedRadixSpec& spec, std::size_t kmax) {
  std::vector<Nat> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto w = witness_y_sequence(spec, k);
    out.push_back(w.y);
    out.push_back(w.y + w.y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational sp_estimate(const PairProfile& p) {
  if (p.rows.empty()) throw std::invalid_argument("sp_estimate: empty profile");
  Rational best = p.rows.front().product_ratio;
  for (const auto& r : p.rows) best = std::max(best, r.product_ratio);
  return best;
}

Real in_estimate(const PairProfile& p, const Nat& tail_start) {
  std::optional<Real> best;
  for (const auto& r : p.rows) {
    if (r.x < tail_start) continue;
    if (!best || r.in_ratio < *best) best = r.in_ratio;
  }
  if (!best) throw std::invalid_argument("in_estimate: no rows at or beyond tail start " + tail_start.to_string());
  return *best;
}

AnchorScan anchor_scan(const PairSource& pair, const Nat& anchor, std::span<const Rational> c_grid) {
  AnchorScan scan;
  scan.anchor = anchor;
  scan.anchor_row = profile_row(pair, anchor);
  for (const Rational& c : c_grid) {
    if (c <= 0 || c >= 2) throw std::invalid_argument("anchor_scan: c must lie in (0, 2)");
    ScanRow row;
    row.c = c;
    row.y = floor_nat(c * Rational(anchor.big()));
    if (row.y.is_zero()) throw std::invalid_argument("anchor_scan: c * x_n floors to 0");
    row.count_a = pair.count(Side::A, row.y);
    row.count_b = pair.count(Side::B, row.y);
    row.over_anchor = c > 1;
    row.value = make_rational(row.count_a * row.count_b, row.over_anchor ? anchor : row.y);
    scan.rows.push_back(std::move(row));
  }
  const Nat half = anchor / Nat(2);
  scan.half_a = rational_ratio(pair.count(Side::A, half), scan.anchor_row.count_a);
  scan.half_b = rational_ratio(pair.count(Side::B, half), scan.anchor_row.count_b);
  return scan;
}

Nat IntervalMatrix::ledger(std::span<const std::pair<std::size_t, std::size_t>> cells) const {
  Nat total(0);
  for (auto [i, j] : cells) total += products.at(i - 1).at(j - 1);
  return total;
}

IntervalMatrix interval_matrix(const PairSource& pair, const Nat& x, std::size_t parts, const Rational& span) {
  if (parts == 0) throw std::invalid_argument("interval_matrix: parts must be >= 1");
  if (span <= 0) throw std::invalid_argument("interval_matrix: span must be positive");
  IntervalMatrix m;
  m.x = x;
  m.parts = parts;
  m.span = span;
  const Rational total = span * Rational(x.big());
  for (std::size_t i = 0; i <= parts; ++i) m.bounds.push_back(floor_nat(total * i / parts));

  std::vector<Nat> ca, cb;
  for (const Nat& b : m.bounds) {
    ca.push_back(pair.count(Side::A, b));
    cb.push_back(pair.count(Side::B, b));
  }
  m.zero_in_a = !ca.front().is_zero();
  m.zero_in_b = !cb.front().is_zero();
  for (std::size_t i = 1; i <= parts; ++i) {
    m.a_parts.push_back(ca[i] - ca[i - 1]);
    m.b_parts.push_back(cb[i] - cb[i - 1]);
  }
  m.products.assign(parts, std::vector<Nat>(parts));
  for (std::size_t i = 0; i < parts; ++i) {
    for (std::size_t j = 0; j < parts; ++j) m.products[i][j] = m.a_parts[i] * m.b_parts[j];
  }
  return m;
}

std::vector<std::pair<Nat, Nat>> bounded_ratio_flags(const PairProfile& p, const Rational& near_two,
                                                     const Rational& ratio_bound) {
  std::vector<std::pair<Nat, Nat>> out;
  for (std::size_t i = 1; i < p.rows.size(); ++i) {
    const auto& a = p.rows[i - 1];
    const auto& b = p.rows[i];
    if (a.product_ratio < near_two || b.product_ratio < near_two) continue;
    if (make_rational(b.x, a.x) <= ratio_bound) out.emplace_back(a.x, b.x);
  }
  return out;
}

SpInPoint base_k_point(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("base_k_point: k must be >= 2");
  return SpInPoint{"base-" + std::to_string(k), Rational(2 * (k + 1), k + 2), Rational(1, k),
                   Provenance::ClosedForm};
}

SpInPoint finite_point(std::string family, const Nat& count_a, const Nat& count_b, const Nat& x) {
  if (x.is_zero()) throw std::invalid_argument("finite_point: x must be >= 1");
  const Nat& lo = std::min(count_a, count_b);
  return SpInPoint{std::move(family), make_rational(count_a * count_b, x), make_rational(lo * lo, x),
                   Provenance::Estimated};
}

void validate(const SpInPoint& p) {
  if (p.sp < 0 || p.in2 < 0) throw std::invalid_argument("SpInPoint: negative value");
  if (p.provenance == Provenance::ClosedForm && (p.sp > 2 || p.in2 > 1)) {
    throw std::invalid_argument("SpInPoint: closed-form point outside 0 <= SP <= 2, 0 <= IN <= 1");
  }
}

InequalityReport refined_bound_check(const SpInPoint& p) {
  validate(p);
  InequalityReport r;
  r.lhs = p.in2 * p.in2 * p.in2 / (p.in2 + 8);
  r.rhs = 64 * (2 - p.sp);
  r.holds = r.lhs <= r.rhs;
  r.advisory = p.provenance == Provenance::Estimated;
  return r;
}

InequalityReport simple_bound_check(const SpInPoint& p) {
  validate(p);
  InequalityReport r;
  r.lhs = p.in2 * p.in2 * p.in2;
  r.rhs = 576 * (2 - p.sp);
  r.holds = r.lhs <= r.rhs;
  r.advisory = p.provenance == Provenance::Estimated;
  return r;
}

std::vector<FrontierRow> frontier(std::span<const SpInPoint> points) {
  std::vector<FrontierRow> out;
  for (const auto& p : points) {
    validate(p);
    FrontierRow row;
    row.family = p.family;
    row.two_minus_sp = 2 - p.sp;
    auto as_real = [](const Rational& q) {
      return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
    };
    row.in = boost::multiprecision::sqrt(as_real(p.in2));
    if (row.two_minus_sp > 0) {
      row.quotient = boost::multiprecision::sqrt(as_real(p.in2 / row.two_minus_sp));
    } else if (p.in2 == 0) {
      row.quotient = Real(0);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace disjoint
