#pragma once

// Subsets of the cyclic group Z/gZ and the Kneser-type statements checked on
// them: stabilizers, degeneracy, the second theorem of Kneser with its
// corollary, and the growth profile of r-fold sums.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "addbasis/intset.hpp"

namespace addbasis {

class ResidueSet {
 public:
  /// Empty subset of Z/gZ. Throws PreconditionViolated when g < 1.
  explicit ResidueSet(Int modulus);
  ResidueSet(Int modulus, std::span<const Int> members);
  ResidueSet(Int modulus, std::initializer_list<Int> members)
      : ResidueSet(modulus, std::span<const Int>(members.begin(), members.size())) {}
  ResidueSet(Int modulus, std::vector<bool> mask);

  /// Subset whose members are the set bits of `mask` (requires g <= 64).
  static ResidueSet from_bits(Int modulus, std::uint64_t mask);
  static ResidueSet full(Int modulus);

  Int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(Int r) const noexcept { return flags_[static_cast<std::size_t>(mod_floor(r, modulus_))]; }
  const std::vector<bool>& mask() const noexcept { return flags_; }
  std::vector<Int> members() const;

  /// B + t.
  ResidueSet shifted(Int t) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Int modulus_;
  std::vector<bool> flags_;
  std::size_t size_ = 0;
};

/// The subgroup generator·Z / gZ; the generator is a divisor of g.
struct StabilizerSubgroup {
  Int modulus = 1;
  Int generator = 1;

  Int order() const noexcept { return modulus / generator; }
  bool is_trivial() const noexcept { return generator == modulus; }
  bool contains(Int r) const noexcept { return mod_floor(r, modulus) % generator == 0; }
  ResidueSet as_set() const;

  friend bool operator==(const StabilizerSubgroup&, const StabilizerSubgroup&) = default;
};

/// Image of S under Z -> Z/gZ. Throws EmptyOperand.
ResidueSet project(const EventuallyPeriodicSet& s, Int g);
ResidueSet project(const FiniteIntSet& s, Int g);

/// {b + c}. Throws ModulusMismatch.
ResidueSet sum_residue(const ResidueSet& b, const ResidueSet& c);
/// r-fold sum; 0B = {0}.
ResidueSet nfold_residue(const ResidueSet& b, int r);
ResidueSet add_subgroup(const ResidueSet& b, const StabilizerSubgroup& h);

/// Largest H with B + H = B. Throws EmptyOperand.
StabilizerSubgroup stabilizer(const ResidueSet& b);
bool is_degenerate(const ResidueSet& b);

struct KneserWitness {
  StabilizerSubgroup subgroup;
  bool absorbs = false;     // B + C + H == B + C
  bool inequality = false;  // |B+C| >= |B+H| + |C+H| - |H|

  bool holds() const noexcept { return absorbs && inequality; }
};

/// Evaluates the second theorem of Kneser with H = stab(B + C).
/// Throws ModulusMismatch, EmptyOperand.
KneserWitness kneser_witness(const ResidueSet& b, const ResidueSet& c);

/// |ΣB_i| >= Σ|B_i| - n + 1. Throws PreconditionViolated when ΣB_i is
/// degenerate, EmptyOperand, ModulusMismatch.
bool sum_lower_bound_check(std::span<const ResidueSet> sets);

/// (B + C non-degenerate) implies (B and C non-degenerate).
bool prop2_check(const ResidueSet& b, const ResidueSet& c);

/// stab(B) + stab(C) ⊆ stab(B + C).
bool stabilizer_containment_check(const ResidueSet& b, const ResidueSet& c);

/// Least g >= 1 with S ~ S^(g), found by linear search over 1..modulus(S).
/// Throws NotSaturable when an exceptional residue lies outside the periodic
/// residues, EmptyOperand when S has no periodic part.
Int minimal_saturation_modulus(const EventuallyPeriodicSet& s);

struct Prop1Outcome {
  bool non_degenerate = false;    // B/gZ has trivial stabilizer
  bool no_smaller_modulus = false;  // no m < g with B^(m) = B^(g)
  Int witness = 0;                // least such m when one exists

  bool holds() const noexcept { return non_degenerate == no_smaller_modulus; }
};

/// Evaluates both sides of the equivalence "B not degenerate modulo g iff
/// no m < g has B^(m) = B^(g)", searching every m in 1..g-1.
Prop1Outcome prop1_check(const FiniteIntSet& b, Int g);

struct Lemma1Profile {
  int r0 = 0;
  std::vector<std::size_t> values;  // values[r] = |rB|, r = 0..r0+2
};

/// Throws EmptyOperand.
Lemma1Profile lemma1_profile(const ResidueSet& b);
/// values strictly increase up to r0 and are constant from r0 on.
bool lemma1_shape_holds(const Lemma1Profile& p);

enum class Execution { Serial, Parallel };

struct ExhaustiveResult {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// Lexicographically least failing tuple of subset masks.
  std::vector<std::uint64_t> first_failure;

  bool ok() const noexcept { return failures == 0; }
};

/// Evaluates `pred` on every tuple of `arity` nonempty subsets of Z/gZ
/// (g <= 20), given as bit masks. With Execution::Parallel the first
/// coordinate is split across OpenMP threads; `pred` must be thread-safe.
/// Both modes return identical results.
ExhaustiveResult exhaustive_check(Int g, int arity,
                                  const std::function<bool(std::span<const std::uint64_t>)>& pred,
                                  Execution mode = Execution::Parallel);

}  // namespace addbasis
