#include "addbasis/intset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "addbasis/kernels.hpp"

namespace addbasis {

// ---------------------------------------------------------------- FiniteIntSet

FiniteIntSet::FiniteIntSet(std::vector<Int> xs) : elems_(std::move(xs)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteIntSet::contains(Int x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

Int FiniteIntSet::min() const {
  if (elems_.empty()) throw Error(Errc::EmptySet, "min of empty set");
  return elems_.front();
}

Int FiniteIntSet::max() const {
  if (elems_.empty()) throw Error(Errc::EmptySet, "max of empty set");
  return elems_.back();
}

Int diameter(const FiniteIntSet& x) {
  if (x.empty()) throw Error(Errc::EmptySet, "diameter of empty set");
  return x.max() - x.min();
}

Int delta(const FiniteIntSet& x) {
  if (x.empty()) throw Error(Errc::EmptySet, "delta of empty set");
  if (x.size() == 1) return 1;
  Int g = 0;
  for (Int e : x.elements()) g = std::gcd(g, e - x.min());
  return g;
}

bool is_arithmetic_progression(const FiniteIntSet& x) {
  const auto& e = x.elements();
  for (std::size_t i = 2; i < e.size(); ++i)
    if (e[i] - e[i - 1] != e[1] - e[0]) return false;
  return true;
}

Rational Rational::make(Int num, Int den) {
  if (den == 0) throw Error(Errc::PreconditionViolated, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

// ---------------------------------------------------------------- canonical form

EventuallyPeriodicSet canonicalize(std::vector<Int> exceptional, Int threshold, Int modulus,
                                   std::vector<bool> residues) {
  std::sort(exceptional.begin(), exceptional.end());
  exceptional.erase(std::unique(exceptional.begin(), exceptional.end()), exceptional.end());

  EventuallyPeriodicSet out;
  const auto count = static_cast<std::size_t>(std::count(residues.begin(), residues.end(), true));
  if (count == 0) {
    out.threshold_ = exceptional.empty() ? 0 : exceptional.back() + 1;
    out.exceptional_ = std::move(exceptional);
    return out;
  }

  // Least period: the smallest divisor p of g under which the mask is invariant.
  Int period = modulus;
  for (Int p = 1; p < modulus; ++p) {
    if (modulus % p != 0) continue;
    bool invariant = true;
    for (Int r = 0; r < modulus && invariant; ++r)
      invariant = residues[static_cast<std::size_t>(r)] == residues[static_cast<std::size_t>((r + p) % modulus)];
    if (invariant) {
      period = p;
      break;
    }
  }
  residues.resize(static_cast<std::size_t>(period));

  // Lower the threshold while the element just below it agrees with the rule.
  // Terminates: once below every exceptional element, some residue class is
  // reached within `period` steps.
  for (;;) {
    const Int x = threshold - 1;
    const bool member = !exceptional.empty() && exceptional.back() == x;
    const bool rule = residues[static_cast<std::size_t>(mod_floor(x, period))];
    if (member != rule) break;
    if (member) exceptional.pop_back();
    --threshold;
  }

  out.exceptional_ = std::move(exceptional);
  out.threshold_ = threshold;
  out.modulus_ = period;
  out.residues_ = std::move(residues);
  out.residue_count_ = static_cast<std::size_t>(std::count(out.residues_.begin(), out.residues_.end(), true));
  return out;
}

EventuallyPeriodicSet::EventuallyPeriodicSet() : residues_(1, false) {}

EventuallyPeriodicSet EventuallyPeriodicSet::make(std::vector<Int> exceptional, Int threshold, Int modulus,
                                                  std::span<const Int> residues) {
  if (modulus < 1) throw Error(Errc::PreconditionViolated, "modulus must be positive");
  std::vector<bool> mask(static_cast<std::size_t>(modulus), false);
  for (Int r : residues) {
    if (r < 0 || r >= modulus)
      throw Error(Errc::PreconditionViolated, "residue " + std::to_string(r) + " outside [0, modulus)");
    mask[static_cast<std::size_t>(r)] = true;
  }
  std::vector<Int> below;
  below.reserve(exceptional.size());
  for (Int e : exceptional) {
    if (e < threshold) {
      below.push_back(e);
    } else if (!mask[static_cast<std::size_t>(mod_floor(e, modulus))]) {
      throw Error(Errc::HoleAboveThreshold,
                  "exceptional element " + std::to_string(e) + " >= threshold " + std::to_string(threshold) +
                      " is outside the periodic rule");
    }
  }
  return canonicalize(std::move(below), threshold, modulus, std::move(mask));
}

EventuallyPeriodicSet EventuallyPeriodicSet::naturals() { return make({}, 0, 1, {0}); }

EventuallyPeriodicSet EventuallyPeriodicSet::finite(const FiniteIntSet& x) {
  return canonicalize(x.elements(), 0, 1, {false});
}

EventuallyPeriodicSet EventuallyPeriodicSet::progression(Int start, Int modulus, Int residue) {
  if (modulus < 1) throw Error(Errc::PreconditionViolated, "modulus must be positive");
  return make({}, start, modulus, {mod_floor(residue, modulus)});
}

std::vector<Int> EventuallyPeriodicSet::residues() const {
  std::vector<Int> out;
  for (std::size_t r = 0; r < residues_.size(); ++r)
    if (residues_[r]) out.push_back(static_cast<Int>(r));
  return out;
}

std::size_t EventuallyPeriodicSet::residue_count() const noexcept { return residue_count_; }

bool EventuallyPeriodicSet::contains(Int x) const noexcept {
  if (x >= threshold_) return residues_[static_cast<std::size_t>(mod_floor(x, modulus_))];
  return std::binary_search(exceptional_.begin(), exceptional_.end(), x);
}

Int EventuallyPeriodicSet::min() const {
  if (!exceptional_.empty()) return exceptional_.front();
  if (auto first = next_at_or_above(threshold_)) return *first;
  throw Error(Errc::EmptySet, "min of empty set");
}

Int EventuallyPeriodicSet::max() const {
  if (is_infinite()) throw Error(Errc::PreconditionViolated, "max of an infinite set");
  if (exceptional_.empty()) throw Error(Errc::EmptySet, "max of empty set");
  return exceptional_.back();
}

std::optional<Int> EventuallyPeriodicSet::next_at_or_above(Int x) const {
  if (x < threshold_) {
    auto it = std::lower_bound(exceptional_.begin(), exceptional_.end(), x);
    if (it != exceptional_.end()) return *it;
  }
  if (!is_infinite()) return std::nullopt;
  const Int start = std::max(x, threshold_);
  for (Int j = 0; j < modulus_; ++j)
    if (residues_[static_cast<std::size_t>(mod_floor(start + j, modulus_))]) return start + j;
  return std::nullopt;
}

std::optional<Int> EventuallyPeriodicSet::prev_at_or_below(Int x) const {
  if (x >= threshold_ && is_infinite()) {
    for (Int y = x; y >= threshold_ && y > x - modulus_; --y)
      if (residues_[static_cast<std::size_t>(mod_floor(y, modulus_))]) return y;
  }
  auto it = std::upper_bound(exceptional_.begin(), exceptional_.end(), x);
  if (it == exceptional_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::string EventuallyPeriodicSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < exceptional_.size(); ++i) os << (i ? "," : "") << exceptional_[i];
  os << "}";
  if (is_infinite()) {
    os << " u {x >= " << threshold_ << " : x mod " << modulus_ << " in {";
    bool first = true;
    for (Int r : residues()) {
      os << (first ? "" : ",") << r;
      first = false;
    }
    os << "}}";
  }
  return os.str();
}

// ---------------------------------------------------------------- operations

namespace {

kernels::BitWindow to_window(const EventuallyPeriodicSet& s, Int lo, Int hi) {
  kernels::BitWindow w(lo, hi);
  for (Int e : s.exceptional())
    if (e >= lo && e <= hi) w.set(e);
  if (s.is_infinite()) {
    const auto& mask = s.residue_mask();
    const Int g = s.modulus();
    for (Int x = std::max(lo, s.threshold()); x <= hi; ++x)
      if (mask[static_cast<std::size_t>(mod_floor(x, g))]) w.set(x);
  }
  return w;
}

}  // namespace

EventuallyPeriodicSet translate(const EventuallyPeriodicSet& s, Int t) {
  if (s.empty()) return s;
  std::vector<Int> e = s.exceptional();
  for (Int& x : e) x += t;
  const Int g = s.modulus();
  std::vector<bool> mask(static_cast<std::size_t>(g), false);
  for (Int r = 0; r < g; ++r)
    if (s.residue_mask()[static_cast<std::size_t>(r)]) mask[static_cast<std::size_t>(mod_floor(r + t, g))] = true;
  return canonicalize(std::move(e), s.threshold() + t, g, std::move(mask));
}

EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Int g = std::lcm(a.modulus(), b.modulus());
  const Int t = std::max(a.threshold(), b.threshold());
  std::vector<Int> e;
  for (Int x = std::min(a.min(), b.min()); x < t; ++x)
    if (a.contains(x) || b.contains(x)) e.push_back(x);
  std::vector<bool> mask(static_cast<std::size_t>(g), false);
  for (Int r = 0; r < g; ++r)
    mask[static_cast<std::size_t>(r)] = a.residue_mask()[static_cast<std::size_t>(r % a.modulus())] ||
                                        b.residue_mask()[static_cast<std::size_t>(r % b.modulus())];
  return canonicalize(std::move(e), t, g, std::move(mask));
}

EventuallyPeriodicSet sumset(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  if (a.empty() || b.empty()) throw Error(Errc::EmptyOperand, "sumset with an empty operand");
  // Above T* = T1 + T2 + lcm every component of the sum (E1+E2, E1+P2, P1+E2,
  // P1+P2) is lcm-periodic; P1+P2 needs the two-generator Frobenius bound.
  const Int period = std::lcm(a.modulus(), b.modulus());
  const Int tstar = a.threshold() + b.threshold() + period;
  const Int hi = tstar + period - 1;
  const Int amin = a.min();
  const Int bmin = b.min();

  const auto wa = to_window(a, amin, hi - bmin);
  const auto wb = to_window(b, bmin, hi - amin);
  const auto sum = kernels::sumset_window(wa, wb, hi);

  std::vector<Int> e;
  for (Int x : sum.elements()) {
    if (x >= tstar) break;
    e.push_back(x);
  }
  std::vector<bool> mask(static_cast<std::size_t>(period), false);
  for (Int x = tstar; x <= hi; ++x) mask[static_cast<std::size_t>(mod_floor(x, period))] = sum.test(x);
  return canonicalize(std::move(e), tstar, period, std::move(mask));
}

EventuallyPeriodicSet nfold(const EventuallyPeriodicSet& s, int n) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "nfold needs n >= 1");
  if (s.empty()) throw Error(Errc::EmptyOperand, "nfold of the empty set");
  EventuallyPeriodicSet acc = s;
  for (int i = 2; i <= n; ++i) acc = sumset(acc, s);
  return acc;
}

EventuallyPeriodicSet remove_finite(const EventuallyPeriodicSet& s, const FiniteIntSet& x) {
  if (s.empty() || x.empty()) return s;
  const Int t = std::max(s.threshold(), x.max() + 1);
  std::vector<Int> e;
  for (Int y = s.min(); y < t; ++y)
    if (s.contains(y) && !x.contains(y)) e.push_back(y);
  return canonicalize(std::move(e), t, s.modulus(), s.residue_mask());
}

std::uint64_t count_upto(const EventuallyPeriodicSet& s, Int m) {
  const auto& e = s.exceptional();
  auto n = static_cast<std::uint64_t>(std::upper_bound(e.begin(), e.end(), m) - e.begin());
  if (s.is_infinite() && m >= s.threshold()) {
    const Int g = s.modulus();
    const Int span = m - s.threshold() + 1;
    n += static_cast<std::uint64_t>(span / g) * s.residue_count();
    for (Int j = 0; j < span % g; ++j)
      if (s.residue_mask()[static_cast<std::size_t>(mod_floor(s.threshold() + j, g))]) ++n;
  }
  return n;
}

Rational lower_density(const EventuallyPeriodicSet& s) {
  if (!s.is_infinite()) return {0, 1};
  return Rational::make(static_cast<Int>(s.residue_count()), s.modulus());
}

bool is_cofinite(const EventuallyPeriodicSet& s) noexcept {
  return s.modulus() == 1 && s.residue_mask()[0];
}

bool equal_mod_finite(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) noexcept {
  return a.modulus() == b.modulus() && a.residue_mask() == b.residue_mask();
}

std::vector<bool> residues_mod(const EventuallyPeriodicSet& s, Int g) {
  if (g < 1) throw Error(Errc::PreconditionViolated, "modulus must be positive");
  if (s.empty()) throw Error(Errc::EmptyOperand, "projection of the empty set");
  std::vector<bool> out(static_cast<std::size_t>(g), false);
  for (Int e : s.exceptional()) out[static_cast<std::size_t>(mod_floor(e, g))] = true;
  if (s.is_infinite()) {
    // Class r mod gs meets exactly the classes y ≡ r (mod gcd(g, gs)).
    const Int common = std::gcd(g, s.modulus());
    for (Int r : s.residues())
      for (Int y = r % common; y < g; y += common) out[static_cast<std::size_t>(y)] = true;
  }
  return out;
}

std::vector<bool> residues_mod(const FiniteIntSet& s, Int g) {
  if (g < 1) throw Error(Errc::PreconditionViolated, "modulus must be positive");
  if (s.empty()) throw Error(Errc::EmptyOperand, "projection of the empty set");
  std::vector<bool> out(static_cast<std::size_t>(g), false);
  for (Int e : s.elements()) out[static_cast<std::size_t>(mod_floor(e, g))] = true;
  return out;
}

namespace {

EventuallyPeriodicSet saturation_from_mask(std::vector<bool> mask, Int g) {
  return canonicalize({}, 0, g, std::move(mask));
}

}  // namespace

EventuallyPeriodicSet saturate_mod(const EventuallyPeriodicSet& s, Int g) {
  return saturation_from_mask(residues_mod(s, g), g);
}

EventuallyPeriodicSet saturate_mod(const FiniteIntSet& s, Int g) {
  return saturation_from_mask(residues_mod(s, g), g);
}

FiniteIntSet enumerate_window(const EventuallyPeriodicSet& s, Int lo, Int hi) {
  if (lo > hi) throw Error(Errc::PreconditionViolated, "window lower bound exceeds upper bound");
  return FiniteIntSet(to_window(s, lo, hi).elements());
}

}  // namespace addbasis
