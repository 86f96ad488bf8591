#include <random>

#include <gtest/gtest.h>

#include "addbasis/intset.hpp"
#include "addbasis/sampling.hpp"
#include "oracles.hpp"

using namespace addbasis;

namespace {

void expect_same_window(const EPS& a, const EPS& b, Int lo, Int hi) {
  for (Int x = lo; x <= hi; ++x) ASSERT_EQ(a.contains(x), b.contains(x)) << "x=" << x;
}

EPS odd_plus_evens() { return EPS::make({0, 1}, 2, 2, {0}); }  // {1} ∪ 2N

}  // namespace

TEST(Make, RejectsHoleAboveThreshold) {
  try {
    (void)EPS::make({1}, 0, 2, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HoleAboveThreshold);
  }
}

TEST(Make, KeepsMinimalDescription) {
  const auto s = EPS::make({1}, 2, 2, {0});
  EXPECT_EQ(s.exceptional(), (std::vector<Int>{1}));
  EXPECT_EQ(s.threshold(), 2);
  EXPECT_EQ(s.modulus(), 2);
  EXPECT_EQ(s.residues(), (std::vector<Int>{0}));
}

TEST(Make, NaturalsAreCofinite) {
  const auto n = EPS::make({}, 0, 1, {0});
  EXPECT_EQ(n, EPS::naturals());
  EXPECT_TRUE(is_cofinite(n));
}

TEST(Make, ReducesModulusAndFoldsThreshold) {
  const auto s = EPS::make({}, 5, 4, {0, 2});
  EXPECT_EQ(s.modulus(), 2);
  EXPECT_EQ(s.residues(), (std::vector<Int>{0}));
  EXPECT_EQ(s.threshold(), 5);
  EXPECT_TRUE(s.exceptional().empty());
  for (Int x = -10; x <= 100; ++x) EXPECT_EQ(s.contains(x), oracle::describes({}, 5, 4, {0, 2}, x));
}

TEST(Make, ModulusMustBePositive) {
  EXPECT_THROW((void)EPS::make({}, 0, 0, {0}), Error);
}

TEST(Make, CanonicalFormPreservesMembership) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Int g = draw_between(rng, 1, 12);
    const Int t = draw_between(rng, -5, 30);
    std::vector<Int> r;
    for (Int i = 0; i < g; ++i)
      if (rng() % 2) r.push_back(i);
    std::vector<Int> e;
    for (Int x = t - 15; x < t; ++x)
      if (rng() % 3 == 0) e.push_back(x);
    const auto s = EPS::make(e, t, g, r);
    for (Int x = t - 30; x <= t + 5 * g; ++x) ASSERT_EQ(s.contains(x), oracle::describes(e, t, g, r, x)) << trial;
  }
}

TEST(Make, EquivalentDescriptionsCanonicalizeIdentically) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_infinite_set(rng);
    const Int lift = s.modulus() * draw_between(rng, 1, 3);
    const Int t2 = s.threshold() + draw_between(rng, 0, 10);
    std::vector<Int> e;
    for (Int x = std::min(s.threshold(), Int{0}) - 25; x < t2; ++x)
      if (s.contains(x)) e.push_back(x);
    std::vector<Int> r;
    for (Int i = 0; i < lift; ++i)
      if (s.contains(t2 + lift * 50 + i)) r.push_back(mod_floor(t2 + lift * 50 + i, lift));
    EXPECT_EQ(EPS::make(e, t2, lift, r), s) << s.to_string();
  }
}

TEST(Contains, Examples) {
  EXPECT_FALSE(EPS::naturals().contains(-1));
  EXPECT_FALSE(odd_plus_evens().contains(7));
  EXPECT_TRUE(odd_plus_evens().contains(8));
  EXPECT_TRUE(odd_plus_evens().contains(1));
  EXPECT_TRUE(odd_plus_evens().contains(0));
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate(EPS::progression(0, 2, 0), 1), EPS::make({}, 1, 2, {1}));
  const auto s = odd_plus_evens();
  EXPECT_EQ(translate(s, 0), s);
}

TEST(Translate, RoundTripAndCounting) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const Int t = draw_between(rng, -40, 40);
    const auto moved = translate(s, t);
    EXPECT_EQ(translate(moved, -t), s);
    for (Int x = -60; x <= 120; ++x) ASSERT_EQ(moved.contains(x), s.contains(x - t));
    for (Int m = 0; m <= 200; m += 13) {
      const Int diff = static_cast<Int>(count_upto(moved, m)) - static_cast<Int>(count_upto(s, m));
      EXPECT_LE(std::abs(diff), std::abs(t));
    }
  }
}

TEST(Union, Examples) {
  EXPECT_EQ(set_union(EPS::progression(0, 2, 0), EPS::progression(1, 2, 1)), EPS::naturals());
  const auto s = odd_plus_evens();
  EXPECT_EQ(set_union(s, EPS{}), s);
}

TEST(Union, WindowOracle) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_infinite_set(rng);
    const auto b = random_infinite_set(rng);
    const auto u = set_union(a, b);
    for (Int x = -20; x <= 300; ++x) ASSERT_EQ(u.contains(x), a.contains(x) || b.contains(x));
  }
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset(EPS::finite({0, 1}), EPS::naturals()), EPS::naturals());
  const auto evens = EPS::progression(0, 2, 0);
  EXPECT_EQ(sumset(evens, evens), evens);
  EXPECT_THROW((void)sumset(EPS{}, evens), Error);
}

TEST(Sumset, PeriodIsNotTheGcd) {
  // ({1} ∪ 6N) + 4N: period 4, although gcd(6, 4) = 2.
  const auto a = set_union(EPS::finite({1}), EPS::progression(0, 6, 0));
  const auto b = EPS::progression(0, 4, 0);
  const auto s = sumset(a, b);
  EXPECT_EQ(s.modulus(), 4);
  const auto brute = oracle::pairwise_sums(a, b, 0, 200);
  for (Int x = 0; x <= 200; ++x) EXPECT_EQ(s.contains(x), brute.count(x) > 0) << x;
}

TEST(Sumset, BruteForceOracle) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_infinite_set(rng);
    const auto b = random_infinite_set(rng);
    const auto s = sumset(a, b);
    const Int lo = a.min() + b.min();
    const Int l = std::lcm(a.modulus(), b.modulus());
    const Int hi = a.threshold() + b.threshold() + 4 * l + 20;
    const auto brute = oracle::pairwise_sums(a, b, lo - 5, hi);
    for (Int x = lo - 5; x <= hi; ++x) ASSERT_EQ(s.contains(x), brute.count(x) > 0) << trial << " x=" << x;
  }
}

TEST(Sumset, FiniteOperands) {
  const auto s = sumset(EPS::finite({0, 3}), EPS::finite({1, 2}));
  EXPECT_EQ(s, EPS::finite({1, 2, 4, 5}));
}

TEST(Nfold, Examples) {
  EXPECT_EQ(nfold(EPS::naturals(), 3), EPS::naturals());
  const auto s = nfold(odd_plus_evens(), 2);
  EXPECT_TRUE(is_cofinite(s));
  const auto brute = oracle::hfold_sums(odd_plus_evens(), 2, 0, 200);
  for (Int x = 0; x <= 200; ++x) EXPECT_EQ(s.contains(x), brute.count(x) > 0);
  EXPECT_THROW((void)nfold(EPS::naturals(), 0), Error);
}

TEST(Nfold, Associativity) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_infinite_set(rng);
    const int a = static_cast<int>(draw_between(rng, 1, 4));
    const int b = static_cast<int>(draw_between(rng, 1, 4));
    EXPECT_EQ(sumset(nfold(s, a), nfold(s, b)), nfold(s, a + b));
  }
}

TEST(Nfold, BruteForceOracle) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_infinite_set(rng);
    const int n = static_cast<int>(draw_between(rng, 1, 3));
    const auto f = nfold(s, n);
    const Int lo = n * s.min();
    const Int hi = lo + 150;
    const auto brute = oracle::hfold_sums(s, n, lo, hi);
    for (Int x = lo; x <= hi; ++x) ASSERT_EQ(f.contains(x), brute.count(x) > 0) << trial;
  }
}

TEST(RemoveFinite, Examples) {
  EXPECT_EQ(remove_finite(EPS::naturals(), {0}), EPS::make({}, 1, 1, {0}));
  const auto evens = EPS::progression(0, 2, 0);
  EXPECT_EQ(remove_finite(evens, {1, 3, -7}), evens);
}

TEST(RemoveFinite, WindowOracle) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const auto x = random_finite_set(rng, -5, 40, 6);
    const auto r = remove_finite(s, x);
    for (Int y = -30; y <= 150; ++y) ASSERT_EQ(r.contains(y), s.contains(y) && !x.contains(y));
  }
}

TEST(CountUpto, Examples) {
  EXPECT_EQ(count_upto(EPS::progression(0, 2, 0), 10), 6u);
  EXPECT_EQ(count_upto(EPS{}, 100), 0u);
  EXPECT_EQ(count_upto(EPS::naturals(), -1), 0u);
}

TEST(CountUpto, WindowOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const Int m = draw_between(rng, -10, 500);
    EXPECT_EQ(count_upto(s, m), oracle::members(s, s.min(), m).size());
  }
}

TEST(Density, Examples) {
  EXPECT_EQ(lower_density(EPS::naturals()), Rational::make(1, 1));
  EXPECT_EQ(lower_density(EPS::progression(0, 2, 0)), Rational::make(1, 2));
  EXPECT_EQ(lower_density(EPS::finite({1, 2, 3})), Rational::make(0, 1));
}

TEST(Density, CountingBound) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const double dens = static_cast<double>(s.residue_count()) / static_cast<double>(s.modulus());
    const double slack =
        static_cast<double>(s.exceptional().size() + s.modulus() + std::abs(s.threshold()));
    for (Int m = 1; m <= 500; ++m) {
      const double c = static_cast<double>(count_upto(s, m));
      ASSERT_LE(std::abs(c / m - dens), slack / m + 1e-12) << s.to_string() << " m=" << m;
    }
  }
}

TEST(Density, SubadditiveOverUnions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_infinite_set(rng);
    const auto b = random_infinite_set(rng);
    const auto c = random_infinite_set(rng);
    const auto u = set_union(set_union(a, b), c);
    EXPECT_LE(lower_density(u), lower_density(a) + lower_density(b) + lower_density(c));
    for (Int m = 0; m <= 300; m += 17)
      EXPECT_GE(count_upto(a, m) + count_upto(b, m) + count_upto(c, m), count_upto(u, m));
  }
}

TEST(Cofinite, Examples) {
  EXPECT_TRUE(is_cofinite(remove_finite(EPS::naturals(), {5})));
  EXPECT_FALSE(is_cofinite(EPS::progression(0, 2, 0)));
  EXPECT_FALSE(is_cofinite(EPS::finite({1})));
}

TEST(Cofinite, WindowOracle) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    bool all = true;
    for (Int x = s.threshold(); x < s.threshold() + 3 * s.modulus(); ++x) all = all && s.contains(x);
    EXPECT_EQ(is_cofinite(s), all);
  }
}

TEST(EqualModFinite, Examples) {
  EXPECT_TRUE(equal_mod_finite(EPS::naturals(), remove_finite(EPS::naturals(), {3})));
  EXPECT_FALSE(equal_mod_finite(EPS::progression(0, 2, 0), EPS::progression(1, 2, 1)));
}

TEST(EqualModFinite, Properties) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const auto f = EPS::finite(random_finite_set(rng, -10, 60, 5));
    EXPECT_TRUE(equal_mod_finite(s, set_union(s, f)));
    EXPECT_EQ(is_cofinite(s), equal_mod_finite(s, EPS::naturals()));
  }
}

TEST(SaturateMod, Examples) {
  EXPECT_EQ(saturate_mod(FiniteIntSet{3}, 2), EPS::make({}, 0, 2, {1}));
  EXPECT_EQ(saturate_mod(EPS::naturals(), 5), EPS::naturals());
}

TEST(SaturateMod, WindowOracle) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_infinite_set(rng);
    const Int g = draw_between(rng, 1, 12);
    const auto sat = saturate_mod(s, g);
    // x >= 0 lies in S^(g) iff some member of S is congruent to x mod g.
    const Int hi = std::max(s.threshold(), Int{0}) + 2 * std::lcm(g, s.modulus());
    const auto elems = oracle::members(s, s.min(), hi);
    for (Int x = -5; x <= 100; ++x) {
      const bool hit = x >= 0 && std::any_of(elems.begin(), elems.end(), [&](Int y) { return mod_floor(y - x, g) == 0; });
      ASSERT_EQ(sat.contains(x), hit) << s.to_string() << " g=" << g << " x=" << x;
    }
  }
}

TEST(EnumerateWindow, Examples) {
  EXPECT_EQ(enumerate_window(EPS::progression(0, 2, 0), 0, 5), (FiniteIntSet{0, 2, 4}));
  try {
    (void)enumerate_window(EPS::naturals(), 10, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionViolated);
  }
}

TEST(EnumerateWindow, WindowOracle) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_infinite_set(rng);
    const Int lo = draw_between(rng, -30, 50);
    const Int hi = lo + draw_between(rng, 0, 100);
    EXPECT_EQ(enumerate_window(s, lo, hi).elements(), oracle::members(s, lo, hi));
  }
}

TEST(FiniteParameters, Examples) {
  EXPECT_EQ(diameter(FiniteIntSet{7}), 0);
  EXPECT_EQ(diameter(FiniteIntSet{0, 3, 6}), 6);
  EXPECT_EQ(delta(FiniteIntSet{5}), 1);
  EXPECT_EQ(delta(FiniteIntSet{0, 3, 6}), 3);
  EXPECT_TRUE(is_arithmetic_progression(FiniteIntSet{0, 3, 6}));
  EXPECT_FALSE(is_arithmetic_progression(FiniteIntSet{0, 3, 7}));
}

TEST(FiniteParameters, ExhaustiveSubsets) {
  for (const auto& xs : oracle::nonempty_subsets(12)) {
    const FiniteIntSet x(xs);
    EXPECT_EQ(diameter(x), oracle::pairwise_diameter(xs));
    const Int g = oracle::difference_gcd(xs);
    EXPECT_EQ(delta(x), xs.size() == 1 ? 1 : g);
  }
}

TEST(MinMax, Examples) {
  EXPECT_EQ(odd_plus_evens().min(), 0);
  EXPECT_EQ(EPS::finite({4, 9}).max(), 9);
  EXPECT_THROW((void)EPS{}.min(), Error);
  try {
    (void)EPS::naturals().max();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionViolated);
  }
}
