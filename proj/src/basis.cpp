#include "addbasis/basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace addbasis {

namespace {

void require_subset(const EventuallyPeriodicSet& a, const FiniteIntSet& x) {
  for (Int e : x.elements())
    if (!a.contains(e)) throw Error(Errc::XNotSubset, "element " + std::to_string(e) + " of X is not in A");
}

EventuallyPeriodicSet shifted_finite(const FiniteIntSet& x, Int t) {
  std::vector<Int> e = x.elements();
  for (Int& v : e) v += t;
  return EventuallyPeriodicSet::finite(FiniteIntSet(std::move(e)));
}

}  // namespace

Int eventual_gcd(const EventuallyPeriodicSet& a) {
  if (!a.is_infinite()) throw Error(Errc::FiniteSet, "eventual gcd of a finite set");
  const Int base = a.min();
  Int g = a.modulus();
  for (Int e : a.exceptional()) g = std::gcd(g, e - base);
  for (Int r : a.residues()) {
    const Int first = a.threshold() + mod_floor(r - a.threshold(), a.modulus());
    g = std::gcd(g, first - base);
  }
  return g;
}

OrderResult order(const EventuallyPeriodicSet& a, int cap) {
  if (cap < 1) throw Error(Errc::PreconditionViolated, "order cap must be positive");
  if (!a.is_infinite()) throw Error(Errc::NotABasis, "set is bounded above");
  if (const Int g = eventual_gcd(a); g > 1)
    throw Error(Errc::NotABasis, "all differences are multiples of " + std::to_string(g));

  EventuallyPeriodicSet current = a;
  std::optional<EventuallyPeriodicSet> previous;
  for (int h = 1; h <= cap; ++h) {
    if (h > 1) {
      previous = current;
      current = sumset(current, a);
    }
    if (is_cofinite(current)) return {h, std::move(current), std::move(previous)};
  }
  throw Error(Errc::CapExceeded, "no order <= " + std::to_string(cap));
}

OrderResult remove_and_order(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int cap) {
  require_subset(a, x);
  return order(remove_finite(a, x), cap);
}

Int d_param(const FiniteIntSet& x) {
  const Int diam = diameter(x);
  const Int gap = delta(x);
  if (diam % gap != 0) throw std::logic_error("delta does not divide the diameter");
  return diam / gap;
}

EtaWitness eta_witness(const EventuallyPeriodicSet& b, const FiniteIntSet& x) {
  if (!b.is_infinite()) throw Error(Errc::EmptyOperand, "eta needs an infinite set");
  if (x.empty()) throw Error(Errc::EmptyOperand, "eta needs a nonempty X");
  const Int gap = std::max<Int>(diameter(x), 1);

  // Pairs whose smaller element is >= T + g are translates of pairs starting
  // in [T, T + g), so those base points suffice.
  std::vector<Int> bases = b.exceptional();
  for (Int y = b.threshold(); y < b.threshold() + b.modulus(); ++y)
    if (b.contains(y)) bases.push_back(y);

  EtaWitness best{0, 0};
  bool found = false;
  for (Int a : bases) {
    const auto next = b.next_at_or_above(a + gap);
    const Int d = *next - a;
    if (!found || d < best.eta || (d == best.eta && a < best.lower)) {
      best = {d, a};
      found = true;
    }
  }
  return best;
}

Int eta_param(const EventuallyPeriodicSet& b, const FiniteIntSet& x) { return eta_witness(b, x).eta; }

MuWitness mu_witness(const EventuallyPeriodicSet& b, const FiniteIntSet& x) {
  if (b.empty()) throw Error(Errc::EmptyOperand, "mu needs a nonempty set");
  if (x.empty()) throw Error(Errc::EmptyOperand, "mu needs a nonempty X");
  MuWitness w;
  if (auto inside = b.next_at_or_above(x.min()); inside && *inside <= x.max()) {
    w = {diameter(x), *inside};
  } else {
    const auto below = b.prev_at_or_below(x.min() - 1);
    const auto above = b.next_at_or_above(x.max() + 1);
    if (below) w = {x.max() - *below, *below};
    if (above && (!below || *above - x.min() < w.mu)) w = {*above - x.min(), *above};
  }
  if (w.mu == 0) throw Error(Errc::PreconditionViolated, "X is a singleton contained in B; mu would be 0");
  return w;
}

Int mu_param(const EventuallyPeriodicSet& b, const FiniteIntSet& x) { return mu_witness(b, x).mu; }

RemovalParameters removal_parameters(const EventuallyPeriodicSet& a, const FiniteIntSet& x) {
  require_subset(a, x);
  const auto b = remove_finite(a, x);
  RemovalParameters p;
  p.k = static_cast<Int>(x.size());
  p.d = d_param(x);
  p.eta = eta_param(b, x);
  p.mu = mu_param(b, x);
  p.arithmetic_progression = is_arithmetic_progression(x);
  return p;
}

bool decomposition_check(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int h) {
  require_subset(a, x);
  if (h < 1) throw Error(Errc::PreconditionViolated, "h must be positive");
  const auto b = remove_finite(a, x);
  if (b.empty()) return false;
  const auto xs = EventuallyPeriodicSet::finite(x);

  // folds_of_b[j] = jB for j = 1..h
  std::vector<EventuallyPeriodicSet> folds_of_b{EventuallyPeriodicSet{}, b};
  for (int j = 2; j <= h; ++j) folds_of_b.push_back(sumset(folds_of_b.back(), b));

  EventuallyPeriodicSet acc = folds_of_b[static_cast<std::size_t>(h)];
  EventuallyPeriodicSet lx = xs;
  for (int l = 1; l <= h - 1; ++l) {
    if (l > 1) lx = sumset(lx, xs);
    acc = set_union(acc, sumset(folds_of_b[static_cast<std::size_t>(h - l)], lx));
  }
  return is_cofinite(acc);
}

Theorem5Outcome theorem5_construction(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int cap) {
  require_subset(a, x);
  Theorem5Outcome out;
  out.h = order(a, cap).order;
  const auto b = remove_finite(a, x);
  const auto w = mu_witness(b, x);
  out.mu = w.mu;
  out.y0 = w.y0;

  const Int lo = x.min() - w.y0;
  const Int hi = x.max() - w.y0;
  out.sign = (hi <= 0 && lo < 0) ? -1 : 1;

  const auto augmented =
      set_union(translate(b, -w.y0), EventuallyPeriodicSet::finite(FiniteIntSet{static_cast<Int>(out.sign)}));
  const auto limit = static_cast<Int>(out.h) * out.mu;
  try {
    out.augmented_order = order(augmented, static_cast<int>(limit)).order;
    out.holds = *out.augmented_order <= limit;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded && e.code() != Errc::NotABasis) throw;
    out.holds = false;
  }
  return out;
}

bool theorem5_construction_check(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int cap) {
  return theorem5_construction(a, x, cap).holds;
}

EventuallyPeriodicSet fold_with_origin(const EventuallyPeriodicSet& s, int n) {
  if (n == 0) return EventuallyPeriodicSet::finite(FiniteIntSet{0});
  return nfold(s, n);
}

Lemma3Outcome lemma3_check(const EventuallyPeriodicSet& b, const FiniteIntSet& x, int u, int v, Int window,
                           Int max_modulus) {
  if (u < 0 || v < 0 || u + v < 1) throw Error(Errc::PreconditionViolated, "need u, v >= 0 and u + v >= 1");
  const auto w = eta_witness(b, x);
  Lemma3Outcome out;
  out.eta = w.eta;

  const auto xs = EventuallyPeriodicSet::finite(x);
  const auto lhs = sumset(fold_with_origin(b, u), fold_with_origin(xs, v));
  const auto rhs = nfold(b, u + v);

  // Normalized frame: min X' = 0, and the eta pair of B' is {0, eta}.
  const auto bn = translate(b, -w.lower);
  const auto lhs_n = sumset(fold_with_origin(bn, u), fold_with_origin(shifted_finite(x, -x.min()), v));
  const auto rhs_n = nfold(bn, u + v);

  out.cover = true;
  for (Int n = 0; n <= window && out.cover; ++n) {
    if (!lhs_n.contains(n)) continue;
    bool hit = false;
    for (Int tau = 0; tau < w.eta && !hit; ++tau) hit = rhs_n.contains(n - tau);
    out.cover = hit;
  }

  out.counting_normalized = true;
  for (Int m = 0; m <= window && out.counting_normalized; ++m)
    out.counting_normalized = count_upto(lhs_n, m) <= static_cast<std::uint64_t>(w.eta) * count_upto(rhs_n, m);

  // lhs = lhs_n + (u*lower + v*min X), rhs = rhs_n + (u+v)*lower; each shift by t
  // moves a counting function by at most |t|.
  out.slack = std::abs(static_cast<Int>(u) * w.lower + static_cast<Int>(v) * x.min()) +
              w.eta * std::abs(static_cast<Int>(u + v) * w.lower);
  out.counting = true;
  for (Int m = 0; m <= window && out.counting; ++m)
    out.counting = static_cast<Int>(count_upto(lhs, m)) <=
                   w.eta * static_cast<Int>(count_upto(rhs, m)) + out.slack;

  out.residue = true;
  for (Int g = 1; g <= max_modulus && out.residue; ++g) {
    const auto l = residues_mod(lhs, g);
    const auto r = residues_mod(rhs, g);
    const auto lc = std::count(l.begin(), l.end(), true);
    const auto rc = std::count(r.begin(), r.end(), true);
    out.residue = lc <= w.eta * rc;
  }
  return out;
}

}  // namespace addbasis
