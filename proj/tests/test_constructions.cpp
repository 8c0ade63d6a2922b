#include "disjoint/constructions.hpp"
#include "disjoint/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <optional>

using namespace disjoint;

namespace {

oracle::Vec u64s(const MixedRadixSpec& s) {
  oracle::Vec out;
  for (const auto& m : s.moduli()) out.push_back(m.to_u64());
  return out;
}

}  // namespace

TEST(Families, UniformBasesAreDisjointAndMatchDigits) {
  for (std::uint64_t k = 2; k <= 6; ++k) {
    const auto [a, b] = uniform_base_pair(Nat(k), Nat(2000));
    ASSERT_TRUE(oracle::disjoint(a.to_u64(), b.to_u64()));
    const auto spec = uniform_spec_covering(Nat(k), Nat(2000));
    ASSERT_GT(spec.top(), Nat(2000));
    ASSERT_EQ(a.to_u64(), oracle::side(u64s(spec), true, 2000));
  }
  EXPECT_EQ(powers_of_two_pair(Nat(500)), uniform_base_pair(Nat(2), Nat(500)));
  EXPECT_THROW(uniform_base_pair(Nat(1), Nat(10)), std::invalid_argument);
}

TEST(Witness, SecondProbePoint) {
  const auto spec = extend_to_length(MixedRadixSpec({2, 2, 4, 12}), WitnessGrowth{}, 5);
  EXPECT_EQ(n_k(spec, 1), Nat(1));
  EXPECT_EQ(n_k(spec, 2), Nat(13));
  const auto w = witness_y_sequence(spec, 2);
  EXPECT_EQ(w.y, Nat(205));
  EXPECT_EQ(w.a_y, Nat(16));
  EXPECT_EQ(w.b_y, Nat(24));
  EXPECT_EQ(w.a_2y, Nat(24));
  EXPECT_EQ(w.b_2y, Nat(24));
  EXPECT_TRUE(w.consistent());
  EXPECT_EQ(w.ratio_y(), Rational(384, 205));
  EXPECT_EQ(w.ratio_2y(), Rational(288, 205));
}

TEST(Witness, ClosedFormsAgainstDpAndEnumeration) {
  Rational prev_y = 0, prev_2y = 0;
  for (std::size_t k = 1; k <= 7; ++k) {
    const auto spec = witness_spec(MixedRadixSpec({2, 2}), k);
    const auto w = witness_y_sequence(spec, k);
    Nat odd(1), even(1);
    for (std::size_t i = 1; i <= k; ++i) {
      odd *= spec.m(2 * i - 1);
      even *= spec.m(2 * i);
    }
    ASSERT_EQ(w.y, n_k(spec, k) + spec.place(2 * k));
    ASSERT_EQ(w.a_y, Nat(2) * odd);
    ASSERT_EQ(w.b_y, even);
    ASSERT_EQ(w.a_2y, Nat(3) * odd);
    ASSERT_TRUE(w.consistent()) << "k=" << k;
    if (k <= 2) {
      const auto mods = u64s(spec);
      const std::uint64_t y = w.y.to_u64();
      const auto a = oracle::side(mods, true, 2 * y), b = oracle::side(mods, false, 2 * y);
      ASSERT_EQ(Nat(oracle::count_le(a, y)), w.a_y);
      ASSERT_EQ(Nat(oracle::count_le(b, 2 * y)), w.b_2y);
    }
    ASSERT_GT(w.ratio_y(), prev_y);
    ASSERT_LT(w.ratio_y(), Rational(2));
    ASSERT_GT(w.ratio_2y(), prev_2y);
    ASSERT_LT(w.ratio_2y(), Rational(3, 2));
    prev_y = w.ratio_y();
    prev_2y = w.ratio_2y();
  }
  EXPECT_GT(prev_2y, Rational(149, 100));
}

TEST(Witness, RefusesShortSpecs) {
  EXPECT_THROW(witness_y_sequence(MixedRadixSpec({2, 2}), 1), ExtendSpecError);
  // m_3 = 2 leaves no room for the digit 2 at P_2
  EXPECT_THROW(witness_y_sequence(MixedRadixSpec({2, 2, 2, 2}), 1), ExtendSpecError);
  EXPECT_THROW(witness_y_sequence(MixedRadixSpec({2, 2, 4}), 2), ExtendSpecError);
  EXPECT_EQ(witness_y_sequence(MixedRadixSpec({2, 2, 3}), 1).y, Nat(5));
}

TEST(Fit, TwoTargets) {
  const std::vector<Nat> targets{9, 100};
  const auto fit = fit_moduli(targets);
  EXPECT_EQ(fit.spec.moduli(), (std::vector<Nat>{2, 4, 2, 5}));
  ASSERT_EQ(fit.windows.size(), 2u);
  EXPECT_EQ(fit.windows[0].lower, Nat(9));
  EXPECT_EQ(fit.windows[0].upper, Nat(12));
  EXPECT_EQ(fit.windows[1].lower, Nat(89));
  EXPECT_EQ(fit.windows[1].upper, Nat(112));
  EXPECT_EQ(fit.windows[0].bound, Rational(4, 3));
  EXPECT_EQ(fit.windows[1].bound, Rational(10, 7));
  EXPECT_EQ(fit_counting_spec(fit).moduli(), (std::vector<Nat>{2, 4, 2, 5, 2, 2}));
}

TEST(Fit, SingleTargetAndInfeasibility) {
  const std::vector<Nat> one{9};
  EXPECT_EQ(fit_moduli(one).windows.size(), 1u);
  EXPECT_THROW(fit_moduli(std::vector<Nat>{9, 10}), InfeasibleTarget);
  EXPECT_THROW(fit_moduli(std::vector<Nat>{4}), InfeasibleTarget);
  EXPECT_THROW(fit_moduli(std::vector<Nat>{100, 50}), InfeasibleTarget);
  EXPECT_THROW(fit_moduli(std::vector<Nat>{}), std::invalid_argument);
}

// Whole windows, not only the targets, keep the ratio above the bound.
TEST(Fit, RandomFeasibleTargetsMeetTheirWindows) {
  std::mt19937_64 rng(31);
  int fitted = 0;
  for (int t = 0; t < 150; ++t) {
    std::vector<Nat> targets;
    std::uint64_t x = 5 + rng() % 20;
    for (int i = 0; i < 3 && x < 50'000; ++i) {
      targets.emplace_back(x);
      x = x * (4 + rng() % 12) + rng() % 50;
    }
    std::optional<FitResult> maybe;
    try {
      maybe = fit_moduli(targets);
    } catch (const InfeasibleTarget&) {
      continue;
    }
    const FitResult& fit = *maybe;
    ++fitted;
    const auto mods = u64s(fit_counting_spec(fit));
    const std::uint64_t top = fit.windows.back().upper.to_u64();
    const auto a = oracle::side_by_products(mods, true, top), b = oracle::side_by_products(mods, false, top);
    for (const auto& w : fit.windows) {
      ASSERT_LE(w.lower, w.target);
      ASSERT_LE(w.target, w.upper);
      ASSERT_EQ(w.bound, Rational(2) / (1 + Rational(2) / Rational(w.m_2k.big())));
      for (std::uint64_t y = w.lower.to_u64(); y <= w.upper.to_u64(); ++y) {
        const Rational r(oracle::count_le(a, y) * oracle::count_le(b, y), y);
        ASSERT_GE(r, w.bound) << "y=" << y;
      }
    }
  }
  EXPECT_GT(fitted, 20);
}
