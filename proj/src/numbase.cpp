#include "disjoint/numbase.hpp"

#include <algorithm>
#include <stdexcept>

namespace disjoint {

namespace {

// Elements as u64 when the largest one is within the bitmap cap.
std::optional<std::vector<std::uint64_t>> small_values(std::span<const Nat> elems) {
  if (!elems.empty() && elems.back() > Nat(kBitmapCap)) return std::nullopt;
  std::vector<std::uint64_t> out;
  out.reserve(elems.size());
  for (const Nat& e : elems) out.push_back(e.to_u64());
  return out;
}

boost::dynamic_bitset<> diff_bitmap(std::span<const std::uint64_t> v) {
  if (v.empty()) return {};
  boost::dynamic_bitset<> bits(v.back() + 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) bits.set(v[j] - v[i]);
  }
  return bits;
}

std::vector<Nat> sorted_positive_diffs(std::span<const Nat> elems) {
  std::vector<Nat> d;
  d.reserve(elems.size() * (elems.size() - (elems.empty() ? 0 : 1)) / 2);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) d.push_back(elems[j] - elems[i]);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::span<const Nat> prefix_up_to(const IntSet& s, const Nat& x) {
  const auto& e = s.elems();
  auto it = std::upper_bound(e.begin(), e.end(), x);
  return {e.data(), static_cast<std::size_t>(it - e.begin())};
}

std::optional<Nat> shared_positive_difference(std::span<const Nat> a, std::span<const Nat> b) {
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  auto sa = small_values(a);
  auto sb = small_values(b);
  if (sa && sb) {
    // Bitmap over the side with the smaller span; scan the other side's pairs.
    const bool a_first = sa->back() <= sb->back();
    const auto& base = a_first ? *sa : *sb;
    const auto& other = a_first ? *sb : *sa;
    const auto bits = diff_bitmap(base);
    std::optional<std::uint64_t> best;
    for (std::size_t j = 0; j < other.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const std::uint64_t d = other[j] - other[i];
        if (d < bits.size() && bits.test(d) && (!best || d < *best)) best = d;
      }
    }
    if (best) return Nat(*best);
    return std::nullopt;
  }
  const auto da = sorted_positive_diffs(a);
  const auto db = sorted_positive_diffs(b);
  std::vector<Nat> common;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.front();
}

std::uint64_t count_positive_diffs(std::span<const Nat> elems) {
  if (elems.size() < 2) return 0;
  if (auto v = small_values(elems)) {
    auto bits = diff_bitmap(*v);
    return bits.count() - 1;
  }
  return sorted_positive_diffs(elems).size();
}

}  // namespace

IntSet::IntSet(std::vector<Nat> elems, Nat limit) : elems_(std::move(elems)), limit_(std::move(limit)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (!(elems_[i - 1] < elems_[i])) {
      throw std::invalid_argument("IntSet: elements not strictly increasing at index " + std::to_string(i));
    }
  }
  if (!elems_.empty() && elems_.back() > limit_) {
    throw std::invalid_argument("IntSet: element " + elems_.back().to_string() + " exceeds limit " +
                                limit_.to_string());
  }
}

bool IntSet::contains(const Nat& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

IntSet IntSet::truncated(const Nat& new_limit) const {
  if (new_limit > limit_) throw UncertifiedRegion("IntSet::truncated: new limit above certified limit");
  auto pre = prefix_up_to(*this, new_limit);
  return IntSet(std::vector<Nat>(pre.begin(), pre.end()), new_limit);
}

std::vector<std::uint64_t> IntSet::to_u64() const {
  std::vector<std::uint64_t> out;
  out.reserve(elems_.size());
  for (const Nat& e : elems_) out.push_back(e.to_u64());
  return out;
}

std::size_t DiffSet::count_positive_up_to(std::uint64_t x) const {
  std::size_t n = 0;
  const std::uint64_t top = std::min<std::uint64_t>(x, present.empty() ? 0 : present.size() - 1);
  for (std::uint64_t d = 1; d <= top && !present.empty(); ++d) n += present.test(d);
  return n;
}

std::vector<std::uint64_t> DiffSet::values() const {
  std::vector<std::uint64_t> out;
  for (auto i = present.find_first(); i != boost::dynamic_bitset<>::npos; i = present.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

Nat count_up_to(const IntSet& s, const Nat& x) {
  if (x > s.limit()) {
    throw UncertifiedRegion("count_up_to: x=" + x.to_string() + " beyond certified limit " + s.limit().to_string());
  }
  return Nat(prefix_up_to(s, x).size());
}

DiffSet difference_set(const IntSet& s) {
  DiffSet out;
  if (s.empty()) return out;
  auto v = small_values(s.elems());
  if (!v) throw std::length_error("difference_set: max element exceeds bitmap cap");
  out.limit = v->back();
  out.present = diff_bitmap(*v);
  return out;
}

bool is_sidon(std::span<const std::uint64_t> v) {
  if (v.size() < 3) return true;
  boost::dynamic_bitset<> seen(v.back() + 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t d = v[j] - v[i];
      if (seen.test(d)) return false;
      seen.set(d);
    }
  }
  return true;
}

bool is_sidon(const IntSet& s) {
  if (auto v = small_values(s.elems())) return is_sidon(std::span<const std::uint64_t>(*v));
  const auto& e = s.elems();
  std::vector<Nat> d;
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) d.push_back(e[j] - e[i]);
  }
  std::sort(d.begin(), d.end());
  return std::adjacent_find(d.begin(), d.end()) == d.end();
}

bool are_disjoint(const IntSet& a, const IntSet& b) {
  return !shared_positive_difference(a.elems(), b.elems()).has_value();
}

std::optional<Nat> first_shared_difference(const IntSet& a, const IntSet& b) {
  return shared_positive_difference(a.elems(), b.elems());
}

Nat sum_coverage(const IntSet& a, const IntSet& b, const Nat& x) {
  if (x > a.limit() || x > b.limit()) {
    throw UncertifiedRegion("sum_coverage: x=" + x.to_string() + " beyond certified limit");
  }
  const auto pa = prefix_up_to(a, x);
  const auto pb = prefix_up_to(b, x);
  if (pa.empty() || pb.empty()) return Nat(0);
  auto va = small_values(pa);
  auto vb = small_values(pb);
  if (va && vb) {
    boost::dynamic_bitset<> sums(va->back() + vb->back() + 1);
    for (auto ea : *va) {
      for (auto eb : *vb) sums.set(ea + eb);
    }
    return Nat(sums.count());
  }
  std::vector<Nat> sums;
  sums.reserve(pa.size() * pb.size());
  for (const Nat& ea : pa) {
    for (const Nat& eb : pb) sums.push_back(ea + eb);
  }
  std::sort(sums.begin(), sums.end());
  return Nat(static_cast<std::size_t>(std::unique(sums.begin(), sums.end()) - sums.begin()));
}

std::string BoundsReport::violation() const {
  if (!disjoint) {
    return "disjointness: shared difference " + (shared_difference ? shared_difference->to_string() : "?");
  }
  if (!product_ok) return "product bound A(x)B(x) <= 2x+1";
  if (!packing_ok) return "packing bound |D(A)∩[1,x]| + |D(B)∩[1,x]| <= x";
  if (binomial_ok && !*binomial_ok) return "binomial bound C(A(x),2) + C(B(x),2) <= x";
  return {};
}

BoundsReport pair_bounds_check(const IntSet& a, const IntSet& b, const Nat& x) {
  if (x > a.limit() || x > b.limit()) {
    throw UncertifiedRegion("pair_bounds_check: x=" + x.to_string() + " beyond certified limit");
  }
  BoundsReport r;
  r.x = x;
  const auto pa = prefix_up_to(a, x);
  const auto pb = prefix_up_to(b, x);
  r.count_a = Nat(pa.size());
  r.count_b = Nat(pb.size());

  r.shared_difference = shared_positive_difference(pa, pb);
  r.disjoint = !r.shared_difference.has_value();

  const BigInt two_x_plus_one = 2 * x.big() + 1;
  r.product_margin = two_x_plus_one - BigInt(pa.size()) * BigInt(pb.size());
  r.product_ok = r.product_margin >= 0;

  r.diffs_a = count_positive_diffs(pa);
  r.diffs_b = count_positive_diffs(pb);
  r.packing_margin = x.big() - BigInt(r.diffs_a) - BigInt(r.diffs_b);
  r.packing_ok = r.packing_margin >= 0;

  auto sidon = [](std::span<const Nat> p) {
    if (auto v = small_values(p)) return is_sidon(std::span<const std::uint64_t>(*v));
    return is_sidon(IntSet(std::vector<Nat>(p.begin(), p.end()), p.empty() ? Nat(0) : p.back()));
  };
  if (sidon(pa) && sidon(pb)) {
    auto choose2 = [](std::size_t n) { return BigInt(n) * BigInt(n == 0 ? 0 : n - 1) / 2; };
    r.binomial_ok = choose2(pa.size()) + choose2(pb.size()) <= x.big();
  }
  return r;
}

}  // namespace disjoint
