#pragma once

// Seeded random instances for corpus generation and the sampled suites.
// Draws use rng() % n so a seed reproduces the same instances everywhere.

#include <random>

#include "addbasis/intset.hpp"

namespace addbasis {

struct SampleRanges {
  Int max_modulus = 12;
  Int min_threshold = -3;
  Int max_threshold = 30;
  int max_exceptional = 4;
  Int exceptional_span = 20;  // exceptional elements lie in [T - span, T - 1]
};

inline Int draw_between(std::mt19937_64& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// An infinite eventually periodic set.
EventuallyPeriodicSet random_infinite_set(std::mt19937_64& rng, const SampleRanges& ranges = {});

/// A nonempty finite set of at most max_size elements of [lo, hi].
FiniteIntSet random_finite_set(std::mt19937_64& rng, Int lo, Int hi, int max_size);

}  // namespace addbasis
