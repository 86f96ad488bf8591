#include "addbasis/residue.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace addbasis {

namespace {

void require_same_modulus(const ResidueSet& b, const ResidueSet& c) {
  if (b.modulus() != c.modulus())
    throw Error(Errc::ModulusMismatch,
                "Z/" + std::to_string(b.modulus()) + " vs Z/" + std::to_string(c.modulus()));
}

void require_nonempty(const ResidueSet& b) {
  if (b.empty()) throw Error(Errc::EmptyOperand, "empty subset of Z/" + std::to_string(b.modulus()));
}

}  // namespace

ResidueSet::ResidueSet(Int modulus) : modulus_(modulus) {
  if (modulus < 1) throw Error(Errc::PreconditionViolated, "modulus must be positive");
  flags_.assign(static_cast<std::size_t>(modulus), false);
}

ResidueSet::ResidueSet(Int modulus, std::span<const Int> members) : ResidueSet(modulus) {
  for (Int r : members) {
    const auto i = static_cast<std::size_t>(mod_floor(r, modulus));
    if (!flags_[i]) ++size_;
    flags_[i] = true;
  }
}

ResidueSet::ResidueSet(Int modulus, std::vector<bool> mask) : ResidueSet(modulus) {
  if (mask.size() != static_cast<std::size_t>(modulus))
    throw Error(Errc::ModulusMismatch, "mask length differs from modulus");
  flags_ = std::move(mask);
  size_ = static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), true));
}

ResidueSet ResidueSet::from_bits(Int modulus, std::uint64_t mask) {
  if (modulus > 64) throw Error(Errc::PreconditionViolated, "bit masks cover moduli up to 64");
  std::vector<bool> flags(static_cast<std::size_t>(modulus), false);
  for (Int r = 0; r < modulus; ++r) flags[static_cast<std::size_t>(r)] = (mask >> r) & 1U;
  return ResidueSet(modulus, std::move(flags));
}

ResidueSet ResidueSet::full(Int modulus) {
  return ResidueSet(modulus, std::vector<bool>(static_cast<std::size_t>(modulus), true));
}

std::vector<Int> ResidueSet::members() const {
  std::vector<Int> out;
  for (Int r = 0; r < modulus_; ++r)
    if (flags_[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

ResidueSet ResidueSet::shifted(Int t) const {
  std::vector<bool> out(flags_.size(), false);
  for (Int r = 0; r < modulus_; ++r)
    if (flags_[static_cast<std::size_t>(r)]) out[static_cast<std::size_t>(mod_floor(r + t, modulus_))] = true;
  return ResidueSet(modulus_, std::move(out));
}

ResidueSet StabilizerSubgroup::as_set() const {
  std::vector<bool> mask(static_cast<std::size_t>(modulus), false);
  for (Int r = 0; r < modulus; r += generator) mask[static_cast<std::size_t>(r)] = true;
  return ResidueSet(modulus, std::move(mask));
}

ResidueSet project(const EventuallyPeriodicSet& s, Int g) { return ResidueSet(g, residues_mod(s, g)); }

ResidueSet project(const FiniteIntSet& s, Int g) { return ResidueSet(g, residues_mod(s, g)); }

ResidueSet sum_residue(const ResidueSet& b, const ResidueSet& c) {
  require_same_modulus(b, c);
  const Int g = b.modulus();
  std::vector<bool> out(static_cast<std::size_t>(g), false);
  const auto bm = b.members();
  const auto cm = c.members();
  for (Int x : bm)
    for (Int y : cm) out[static_cast<std::size_t>((x + y) % g)] = true;
  return ResidueSet(g, std::move(out));
}

ResidueSet nfold_residue(const ResidueSet& b, int r) {
  ResidueSet acc(b.modulus(), {0});
  for (int i = 0; i < r; ++i) acc = sum_residue(acc, b);
  return acc;
}

ResidueSet add_subgroup(const ResidueSet& b, const StabilizerSubgroup& h) {
  if (h.modulus != b.modulus()) throw Error(Errc::ModulusMismatch, "subgroup of a different group");
  return sum_residue(b, h.as_set());
}

StabilizerSubgroup stabilizer(const ResidueSet& b) {
  require_nonempty(b);
  const Int g = b.modulus();
  // Subgroups of Z/gZ are dZ/gZ for d | g; the smallest stabilizing d gives
  // the largest subgroup.
  for (Int d = 1; d < g; ++d)
    if (g % d == 0 && b.shifted(d) == b) return {g, d};
  return {g, g};
}

bool is_degenerate(const ResidueSet& b) { return !stabilizer(b).is_trivial(); }

KneserWitness kneser_witness(const ResidueSet& b, const ResidueSet& c) {
  require_same_modulus(b, c);
  require_nonempty(b);
  require_nonempty(c);
  const ResidueSet sum = sum_residue(b, c);
  KneserWitness w;
  w.subgroup = stabilizer(sum);
  w.absorbs = add_subgroup(sum, w.subgroup) == sum;
  const auto lhs = static_cast<Int>(sum.size());
  const auto rhs = static_cast<Int>(add_subgroup(b, w.subgroup).size()) +
                   static_cast<Int>(add_subgroup(c, w.subgroup).size()) - w.subgroup.order();
  w.inequality = lhs >= rhs;
  return w;
}

bool sum_lower_bound_check(std::span<const ResidueSet> sets) {
  if (sets.empty()) throw Error(Errc::EmptyOperand, "no summands");
  ResidueSet sum = sets.front();
  require_nonempty(sum);
  Int total = static_cast<Int>(sum.size());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    require_nonempty(sets[i]);
    sum = sum_residue(sum, sets[i]);
    total += static_cast<Int>(sets[i].size());
  }
  if (is_degenerate(sum)) throw Error(Errc::PreconditionViolated, "the sum is degenerate");
  return static_cast<Int>(sum.size()) >= total - static_cast<Int>(sets.size()) + 1;
}

bool prop2_check(const ResidueSet& b, const ResidueSet& c) {
  require_same_modulus(b, c);
  require_nonempty(b);
  require_nonempty(c);
  if (is_degenerate(sum_residue(b, c))) return true;
  return !is_degenerate(b) && !is_degenerate(c);
}

bool stabilizer_containment_check(const ResidueSet& b, const ResidueSet& c) {
  const auto hb = stabilizer(b);
  const auto hc = stabilizer(c);
  const auto hs = stabilizer(sum_residue(b, c));
  // hb + hc is generated by gcd of the generators.
  return std::gcd(hb.generator, hc.generator) % hs.generator == 0;
}

Int minimal_saturation_modulus(const EventuallyPeriodicSet& s) {
  if (!s.is_infinite()) throw Error(Errc::EmptyOperand, "set has no periodic part");
  for (Int e : s.exceptional())
    if (!s.residue_mask()[static_cast<std::size_t>(mod_floor(e, s.modulus()))])
      throw Error(Errc::NotSaturable,
                  "exceptional element " + std::to_string(e) + " lies in a class missing from the tail");
  for (Int m = 1; m <= s.modulus(); ++m) {
    if (!equal_mod_finite(s, saturate_mod(s, m))) continue;
    if (is_degenerate(project(s, m)))
      throw std::logic_error("minimal saturation modulus is degenerate: " + s.to_string());
    return m;
  }
  throw std::logic_error("no saturation modulus up to the canonical modulus: " + s.to_string());
}

Prop1Outcome prop1_check(const FiniteIntSet& b, Int g) {
  Prop1Outcome out;
  out.non_degenerate = !is_degenerate(project(b, g));
  const auto target = saturate_mod(b, g);
  out.no_smaller_modulus = true;
  for (Int m = 1; m < g; ++m) {
    if (saturate_mod(b, m) == target) {
      out.no_smaller_modulus = false;
      out.witness = m;
      break;
    }
  }
  return out;
}

Lemma1Profile lemma1_profile(const ResidueSet& b) {
  require_nonempty(b);
  Lemma1Profile p;
  ResidueSet acc(b.modulus(), {0});
  p.values.push_back(acc.size());
  std::optional<int> r0;
  for (int r = 1;; ++r) {
    acc = sum_residue(acc, b);
    p.values.push_back(acc.size());
    if (!r0 && p.values[static_cast<std::size_t>(r)] == p.values[static_cast<std::size_t>(r - 1)]) r0 = r - 1;
    if (r0 && r == *r0 + 2) break;
  }
  p.r0 = *r0;
  return p;
}

bool lemma1_shape_holds(const Lemma1Profile& p) {
  const auto r0 = static_cast<std::size_t>(p.r0);
  if (r0 >= p.values.size()) return false;
  for (std::size_t r = 1; r <= r0; ++r)
    if (p.values[r] <= p.values[r - 1]) return false;
  for (std::size_t r = r0 + 1; r < p.values.size(); ++r)
    if (p.values[r] != p.values[r0]) return false;
  return true;
}

// ---------------------------------------------------------------- exhaustive driver

namespace {

struct LocalTally {
  std::uint64_t failures = 0;
  std::vector<std::uint64_t> first;
};

void visit_tail(std::vector<std::uint64_t>& tuple, std::size_t pos, std::uint64_t limit,
                const std::function<bool(std::span<const std::uint64_t>)>& pred, LocalTally& tally) {
  if (pos == tuple.size()) {
    if (!pred(tuple)) {
      if (tally.failures == 0) tally.first = tuple;
      ++tally.failures;
    }
    return;
  }
  for (std::uint64_t m = 1; m < limit; ++m) {
    tuple[pos] = m;
    visit_tail(tuple, pos + 1, limit, pred, tally);
  }
}

}  // namespace

ExhaustiveResult exhaustive_check(Int g, int arity,
                                  const std::function<bool(std::span<const std::uint64_t>)>& pred,
                                  Execution mode) {
  if (g < 1 || g > 20) throw Error(Errc::PreconditionViolated, "exhaustive enumeration supports 1 <= g <= 20");
  if (arity < 1) throw Error(Errc::PreconditionViolated, "arity must be positive");
  const std::uint64_t limit = std::uint64_t{1} << g;
  const auto outer = static_cast<std::int64_t>(limit);

  ExhaustiveResult result;
  result.checked = 1;
  for (int i = 0; i < arity; ++i) result.checked *= limit - 1;

  auto merge = [&](const LocalTally& t) {
    if (t.failures == 0) return;
    if (result.failures == 0 || t.first < result.first_failure) result.first_failure = t.first;
    result.failures += t.failures;
  };

  if (mode == Execution::Serial) {
    LocalTally tally;
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(arity));
    visit_tail(tuple, 0, limit, pred, tally);
    merge(tally);
    return result;
  }

#pragma omp parallel
  {
    LocalTally tally;
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(arity));
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t m = 1; m < outer; ++m) {
      tuple[0] = static_cast<std::uint64_t>(m);
      LocalTally local;
      visit_tail(tuple, 1, limit, pred, local);
      if (local.failures != 0) {
        if (tally.failures == 0 || local.first < tally.first) tally.first = local.first;
        tally.failures += local.failures;
      }
    }
#pragma omp critical(addbasis_exhaustive_merge)
    merge(tally);
  }
  return result;
}

}  // namespace addbasis
