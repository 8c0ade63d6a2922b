#include "disjoint/constructions.hpp"

#include <stdexcept>

namespace disjoint {

MixedRadixSpec uniform_spec_covering(const Nat& k, const Nat& limit) {
  if (k < Nat(2)) throw std::invalid_argument("uniform base must be >= 2");
  return extend_spec(MixedRadixSpec::uniform(k, 1), ConstantGrowth{k}, limit);
}

std::pair<IntSet, IntSet> uniform_base_pair(const Nat& k, const Nat& limit) {
  return mixed_radix_pair(uniform_spec_covering(k, limit), limit);
}

std::pair<IntSet, IntSet> powers_of_two_pair(const Nat& limit) { return uniform_base_pair(Nat(2), limit); }

Nat n_k(const MixedRadixSpec& spec, std::size_t k) {
  if (spec.size() < 2 * k - 1) throw ExtendSpecError("n_k: spec shorter than 2k-1 moduli");
  Nat total(0);
  for (std::size_t i = 1; i <= k; ++i) total += (spec.m(2 * i - 1) - Nat(1)) * spec.place(2 * i - 2);
  return total;
}

WitnessPoint witness_y_sequence(const MixedRadixSpec& spec, std::size_t k) {
  if (k == 0) throw std::invalid_argument("witness_y_sequence: k must be >= 1");
  if (spec.size() < 2 * k + 1) {
    throw ExtendSpecError("witness_y_sequence: need at least " + std::to_string(2 * k + 1) + " moduli");
  }
  if (spec.m(2 * k + 1) < Nat(3)) {
    throw ExtendSpecError("witness_y_sequence: m_{2k+1} must be >= 3 so digit 2 is legal at P_{2k}");
  }
  WitnessPoint w;
  w.k = k;
  w.y = n_k(spec, k) + spec.place(2 * k);
  const Nat two_y = w.y + w.y;
  if (two_y >= spec.top()) throw ExtendSpecError("witness_y_sequence: 2 y_k beyond P_n");

  Nat odd_prod(1), even_prod(1);
  for (std::size_t i = 1; i <= k; ++i) {
    odd_prod *= spec.m(2 * i - 1);
    even_prod *= spec.m(2 * i);
  }
  w.a_y = Nat(2) * odd_prod;
  w.b_y = even_prod;
  w.a_2y = Nat(3) * odd_prod;
  w.b_2y = even_prod;

  w.dp_a_y = mixed_radix_count(spec, Parity::Even, w.y);
  w.dp_b_y = mixed_radix_count(spec, Parity::Odd, w.y);
  w.dp_a_2y = mixed_radix_count(spec, Parity::Even, two_y);
  w.dp_b_2y = mixed_radix_count(spec, Parity::Odd, two_y);
  return w;
}

MixedRadixSpec witness_spec(const MixedRadixSpec& seed, std::size_t k) {
  MixedRadixSpec spec = extend_to_length(seed, WitnessGrowth{}, 2 * k + 1);
  const Nat y = n_k(spec, k) + spec.place(2 * k);
  return extend_spec(spec, WitnessGrowth{}, y + y);
}

FitResult fit_moduli(std::span<const Nat> targets) {
  if (targets.empty()) throw std::invalid_argument("fit_moduli: no targets");
  std::vector<Nat> mods;
  std::vector<FitWindow> windows;
  Nat p_even(1);  // P_{2k-2}
  Nat nk(0);      // N_{k-1}
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Nat& x = targets[i];
    if (i > 0 && !(targets[i - 1] < x)) {
      throw InfeasibleTarget(i, x.to_string(), "targets must be strictly increasing");
    }
    const std::size_t k = i + 1;
    const Nat p_odd = Nat(2) * p_even;  // m_{2k-1} = 2
    nk += p_even;                       // (m_{2k-1} - 1) P_{2k-2}

    // Admissible m_{2k}: (x - 2 P_{2k-1}) / P_{2k-1} <= m <= (x - N_k) / P_{2k-1}.
    if (x < nk + Nat(2) * p_odd) {
      throw InfeasibleTarget(i, x.to_string(),
                             "interval for m_" + std::to_string(2 * k) + " has no integer >= 2");
    }
    const Nat hi = (x - nk) / p_odd;
    const BigInt lo_num = x.big() - 2 * p_odd.big();
    BigInt lo = lo_num / p_odd.big();  // truncation; adjusted to a ceiling below
    if (lo * p_odd.big() < lo_num) ++lo;
    if (hi.big() < lo) {
      throw InfeasibleTarget(i, x.to_string(), "interval for m_" + std::to_string(2 * k) + " is empty");
    }
    const Nat m = hi;
    mods.emplace_back(2);
    mods.push_back(m);

    FitWindow w;
    w.k = k;
    w.target = x;
    w.n_k = nk;
    w.p_2k = p_odd * m;
    w.lower = nk + w.p_2k;
    w.upper = Nat(2) * p_odd + w.p_2k;
    w.m_2k = m;
    w.bound = Rational(2 * m.big(), m.big() + 2);
    if (x < w.lower || x > w.upper) throw std::logic_error("fit_moduli: window certificate failed");
    windows.push_back(std::move(w));
    p_even = windows.back().p_2k;
  }
  return FitResult{MixedRadixSpec(std::move(mods)), std::move(windows)};
}

MixedRadixSpec fit_counting_spec(const FitResult& fit) { return fit.spec.appended(Nat(2)).appended(Nat(2)); }

}  // namespace disjoint
