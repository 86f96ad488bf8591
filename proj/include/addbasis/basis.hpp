#pragma once

// Basis orders and the removal parameters of a finite subset X of a basis A.

#include <optional>

#include "addbasis/intset.hpp"

namespace addbasis {

inline constexpr int kDefaultOrderCap = 64;
inline constexpr Int kDefaultWindow = 512;

struct OrderResult {
  int order = 0;
  /// order-fold sumset; cofinite.
  EventuallyPeriodicSet certificate_hfold;
  /// (order-1)-fold sumset when order >= 2; not cofinite.
  std::optional<EventuallyPeriodicSet> sub_certificate;
};

struct RemovalParameters {
  Int k = 0;    // |X|
  Int d = 0;    // diam(X) / delta(X)
  Int eta = 0;  // least gap >= diam(X) between distinct elements of A \ X
  Int mu = 0;   // least diam(X ∪ {y}) over y in A \ X
  bool arithmetic_progression = false;
};

/// gcd of all differences of elements of an infinite set. Throws FiniteSet.
Int eventual_gcd(const EventuallyPeriodicSet& a);

/// Least h <= cap with hA cofinite (sums of exactly h elements).
/// Throws NotABasis on a provable obstruction (finite set, eventual gcd > 1)
/// and CapExceeded otherwise; CapExceeded is never a claim of non-basis.
OrderResult order(const EventuallyPeriodicSet& a, int cap = kDefaultOrderCap);

/// order(A \ X). Throws XNotSubset, NotABasis, CapExceeded.
OrderResult remove_and_order(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int cap = kDefaultOrderCap);

/// diam(X) / delta(X). Throws EmptySet.
Int d_param(const FiniteIntSet& x);

struct EtaWitness {
  Int eta = 0;
  Int lower = 0;  // lower and lower + eta both lie in B
};

/// Least |a - b| >= diam(X) over distinct a, b in B; B must be infinite.
/// Throws EmptyOperand.
EtaWitness eta_witness(const EventuallyPeriodicSet& b, const FiniteIntSet& x);
Int eta_param(const EventuallyPeriodicSet& b, const FiniteIntSet& x);

struct MuWitness {
  Int mu = 0;
  Int y0 = 0;  // a minimizing element of B (the least one)
};

/// Least diam(X ∪ {y}) over y in B. Throws EmptyOperand, and
/// PreconditionViolated when the minimum is 0.
MuWitness mu_witness(const EventuallyPeriodicSet& b, const FiniteIntSet& x);
Int mu_param(const EventuallyPeriodicSet& b, const FiniteIntSet& x);

/// k, d, eta, mu of X inside A (eta and mu are taken over A \ X).
/// Throws XNotSubset.
RemovalParameters removal_parameters(const EventuallyPeriodicSet& a, const FiniteIntSet& x);

/// With B = A \ X: hB ∪ ((h-1)B + X) ∪ ... ∪ (B + (h-1)X) is cofinite.
/// Throws XNotSubset.
bool decomposition_check(const EventuallyPeriodicSet& a, const FiniteIntSet& x, int h);

struct Theorem5Outcome {
  int h = 0;
  Int mu = 0;
  Int y0 = 0;
  int sign = 1;                     // the element ±1 added after translating by -y0
  std::optional<int> augmented_order;  // order of the augmented set, if <= h*mu
  bool holds = false;
};

/// Translates A \ X by -y0 (y0 realizes mu), adds +1 or -1 according to
/// where X lies, and checks that the result has order <= h*mu with h = G(A).
Theorem5Outcome theorem5_construction(const EventuallyPeriodicSet& a, const FiniteIntSet& x,
                                      int cap = kDefaultOrderCap);
bool theorem5_construction_check(const EventuallyPeriodicSet& a, const FiniteIntSet& x,
                                 int cap = kDefaultOrderCap);

struct Lemma3Outcome {
  Int eta = 0;
  bool cover = false;             // uB' + vX' ⊆ ∪_{0<=τ<η} ((u+v)B' + τ) on [0, window]
  bool counting_normalized = false;  // counting form with constant 0 in the normalized frame
  bool counting = false;          // counting form with translation slack in the original frame
  bool residue = false;           // |(uB+vX)/gZ| <= η |(u+v)B/gZ| for g = 1..max_modulus
  Int slack = 0;                  // the constant used for `counting`

  bool holds() const noexcept { return cover && counting_normalized && counting && residue; }
};

/// Checks the covering relation behind the counting and residue
/// inequalities for one (B, X, u, v), u + v >= 1. B must be infinite.
Lemma3Outcome lemma3_check(const EventuallyPeriodicSet& b, const FiniteIntSet& x, int u, int v,
                           Int window = 400, Int max_modulus = 12);

/// n-fold sumset with 0S = {0}.
EventuallyPeriodicSet fold_with_origin(const EventuallyPeriodicSet& s, int n);

}  // namespace addbasis
