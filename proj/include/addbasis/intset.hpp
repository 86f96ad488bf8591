#pragma once

// Eventually periodic sets of integers.
//
// An EventuallyPeriodicSet is  E ∪ { x >= T : x mod g ∈ R }  with E a finite
// set of integers all below T. Values are always held in canonical form:
//   * g is the least eventual period of the set,
//   * T is the least threshold that works for (g, R),
//   * a finite set has g = 1, R = ∅, T = max(E) + 1 (T = 0 when empty).
// Canonical form is unique, so operator== is set equality.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addbasis/error.hpp"

namespace addbasis {

using Int = std::int64_t;

/// x mod g in {0, …, g-1}, also for negative x.
constexpr Int mod_floor(Int x, Int g) noexcept {
  const Int r = x % g;
  return r < 0 ? r + g : r;
}

/// Sorted, duplicate-free finite set of integers.
class FiniteIntSet {
 public:
  FiniteIntSet() = default;
  FiniteIntSet(std::initializer_list<Int> xs) : FiniteIntSet(std::vector<Int>(xs)) {}
  explicit FiniteIntSet(std::vector<Int> xs);

  const std::vector<Int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(Int x) const noexcept;
  Int min() const;
  Int max() const;

  friend bool operator==(const FiniteIntSet&, const FiniteIntSet&) = default;

 private:
  std::vector<Int> elems_;
};

/// max(X) - min(X). Throws EmptySet.
Int diameter(const FiniteIntSet& x);
/// gcd of all pairwise differences; 1 for a singleton. Throws EmptySet.
Int delta(const FiniteIntSet& x);
/// True iff consecutive gaps are all equal (singletons and pairs included).
bool is_arithmetic_progression(const FiniteIntSet& x);

/// A rational p/q in lowest terms with q > 0.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational make(Int num, Int den);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  Rational operator+(const Rational& o) const { return make(num * o.den + o.num * den, den * o.den); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

class EventuallyPeriodicSet {
 public:
  /// The empty set.
  EventuallyPeriodicSet();

  /// Canonicalizing constructor. Exceptional elements >= threshold are
  /// absorbed when they obey the periodic rule; otherwise HoleAboveThreshold.
  /// Residues outside [0, modulus) or modulus < 1 are PreconditionViolated.
  static EventuallyPeriodicSet make(std::vector<Int> exceptional, Int threshold, Int modulus,
                                    std::span<const Int> residues);
  static EventuallyPeriodicSet make(std::vector<Int> exceptional, Int threshold, Int modulus,
                                    std::initializer_list<Int> residues) {
    return make(std::move(exceptional), threshold, modulus, std::span<const Int>(residues.begin(), residues.size()));
  }

  static EventuallyPeriodicSet naturals();
  static EventuallyPeriodicSet finite(const FiniteIntSet& x);
  /// {x >= start : x ≡ residue (mod modulus)}.
  static EventuallyPeriodicSet progression(Int start, Int modulus, Int residue);

  const std::vector<Int>& exceptional() const noexcept { return exceptional_; }
  Int threshold() const noexcept { return threshold_; }
  Int modulus() const noexcept { return modulus_; }
  /// Membership flags of the periodic residues, indexed 0..modulus-1.
  const std::vector<bool>& residue_mask() const noexcept { return residues_; }
  std::vector<Int> residues() const;
  std::size_t residue_count() const noexcept;

  bool empty() const noexcept { return exceptional_.empty() && !is_infinite(); }
  bool is_infinite() const noexcept { return residue_count_ > 0; }
  bool contains(Int x) const noexcept;
  /// Smallest element. Throws EmptySet.
  Int min() const;
  /// Largest element of a finite set. Throws EmptySet when empty and
  /// PreconditionViolated when infinite.
  Int max() const;

  /// Least element >= x, if any.
  std::optional<Int> next_at_or_above(Int x) const;
  /// Greatest element <= x, if any.
  std::optional<Int> prev_at_or_below(Int x) const;

  std::string to_string() const;

  friend bool operator==(const EventuallyPeriodicSet&, const EventuallyPeriodicSet&) = default;

 private:
  std::vector<Int> exceptional_;
  Int threshold_ = 0;
  Int modulus_ = 1;
  std::vector<bool> residues_;
  std::size_t residue_count_ = 0;

  friend EventuallyPeriodicSet canonicalize(std::vector<Int> exceptional, Int threshold, Int modulus,
                                            std::vector<bool> residues);
};

using EPS = EventuallyPeriodicSet;

/// Builds the canonical form of  E ∪ {x >= T : residues[x mod g]}; every
/// element of E must be < T.
EventuallyPeriodicSet canonicalize(std::vector<Int> exceptional, Int threshold, Int modulus,
                                   std::vector<bool> residues);

EventuallyPeriodicSet translate(const EventuallyPeriodicSet& s, Int t);
EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);
/// {a + b}. Throws EmptyOperand.
EventuallyPeriodicSet sumset(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);
/// Sums of exactly n elements, n >= 1. Throws EmptyOperand / PreconditionViolated.
EventuallyPeriodicSet nfold(const EventuallyPeriodicSet& s, int n);
EventuallyPeriodicSet remove_finite(const EventuallyPeriodicSet& s, const FiniteIntSet& x);

/// |S ∩ (-inf, m]|.
std::uint64_t count_upto(const EventuallyPeriodicSet& s, Int m);
/// |R| / g, 0 for finite sets.
Rational lower_density(const EventuallyPeriodicSet& s);
bool is_cofinite(const EventuallyPeriodicSet& s) noexcept;
/// Finite symmetric difference.
bool equal_mod_finite(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) noexcept;

/// Image in Z/gZ as membership flags. Throws EmptyOperand.
std::vector<bool> residues_mod(const EventuallyPeriodicSet& s, Int g);
std::vector<bool> residues_mod(const FiniteIntSet& s, Int g);

/// (S + gZ) ∩ N. Throws EmptyOperand.
EventuallyPeriodicSet saturate_mod(const EventuallyPeriodicSet& s, Int g);
EventuallyPeriodicSet saturate_mod(const FiniteIntSet& s, Int g);

/// S ∩ [lo, hi]. Throws PreconditionViolated when lo > hi.
FiniteIntSet enumerate_window(const EventuallyPeriodicSet& s, Int lo, Int hi);

}  // namespace addbasis
