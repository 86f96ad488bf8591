#include "addbasis/sampling.hpp"

namespace addbasis {

EventuallyPeriodicSet random_infinite_set(std::mt19937_64& rng, const SampleRanges& ranges) {
  const Int g = draw_between(rng, 1, ranges.max_modulus);
  std::vector<Int> residues;
  for (Int r = 0; r < g; ++r)
    if (rng() % 2 == 0) residues.push_back(r);
  if (residues.empty()) residues.push_back(draw_between(rng, 0, g - 1));
  const Int threshold = draw_between(rng, ranges.min_threshold, ranges.max_threshold);
  std::vector<Int> exceptional;
  const Int extra = draw_between(rng, 0, ranges.max_exceptional);
  for (Int i = 0; i < extra; ++i) exceptional.push_back(threshold - draw_between(rng, 1, ranges.exceptional_span));
  return EventuallyPeriodicSet::make(std::move(exceptional), threshold, g, residues);
}

FiniteIntSet random_finite_set(std::mt19937_64& rng, Int lo, Int hi, int max_size) {
  const Int n = draw_between(rng, 1, max_size);
  std::vector<Int> xs;
  for (Int i = 0; i < n; ++i) xs.push_back(draw_between(rng, lo, hi));
  return FiniteIntSet(std::move(xs));
}

}  // namespace addbasis
