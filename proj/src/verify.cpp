#include <chrono>
#include <random>
#include <sstream>

#include "addbasis/harness.hpp"
#include "addbasis/sampling.hpp"

namespace addbasis {

namespace {

std::string describe(const ResidueSet& b) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Int r : b.members()) {
    os << (first ? "" : ",") << r;
    first = false;
  }
  os << "} in Z/" << b.modulus();
  return os.str();
}

std::string describe_tuple(Int g, const std::vector<std::uint64_t>& masks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < masks.size(); ++i) os << (i ? " ; " : "") << describe(ResidueSet::from_bits(g, masks[i]));
  return os.str();
}

std::string describe(const FiniteIntSet& x) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x.elements()[i];
  os << "}";
  return os.str();
}

// Runs an exhaustive predicate for every g in [1, max_g]; stops at the first
// modulus with a failure.
SuiteResult exhaustive_suite(std::string name, Int max_g, int arity,
                             const std::function<bool(Int, std::span<const std::uint64_t>)>& pred) {
  SuiteResult s;
  s.name = std::move(name);
  s.passed = true;
  for (Int g = 1; g <= max_g && s.passed; ++g) {
    const auto r = exhaustive_check(g, arity, [&](std::span<const std::uint64_t> m) { return pred(g, m); });
    s.checked += r.checked;
    if (!r.ok()) {
      s.passed = false;
      s.counterexample = describe_tuple(g, r.first_failure);
    }
  }
  return s;
}

SuiteResult lemma1_suite(const VerifyConfig& c) {
  return exhaustive_suite("lemma1_profile", c.lemma1_modulus, 1, [](Int g, std::span<const std::uint64_t> m) {
    const auto b = ResidueSet::from_bits(g, m[0]);
    const auto p = lemma1_profile(b);
    if (!lemma1_shape_holds(p)) return false;
    for (int r = p.r0; r <= p.r0 + static_cast<int>(g); ++r)
      if (nfold_residue(b, r).size() != p.values[static_cast<std::size_t>(p.r0)]) return false;
    return true;
  });
}

SuiteResult lemma2_suite(const VerifyConfig& c) {
  SuiteResult s{"lemma2_cardinality", true, 0, "", 0};
  const auto span = c.lemma2_range + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << span) && s.passed; ++mask) {
    std::vector<Int> xs;
    for (Int i = 0; i < span; ++i)
      if ((mask >> i) & 1U) xs.push_back(i);
    const FiniteIntSet x(xs);
    const Int d = d_param(x);
    // X is an arithmetic progression iff it equals {min + i*delta : i <= d}.
    bool ap = true;
    for (Int i = 0; i <= d && ap; ++i) ap = x.contains(x.min() + i * delta(x));
    const auto k = static_cast<Int>(x.size());
    ++s.checked;
    if (k > d + 1 || (k == d + 1) != ap) {
      s.passed = false;
      s.counterexample = "X = " + describe(x) + ", d = " + std::to_string(d);
    }
  }
  return s;
}

SuiteResult lemma3_suite(const VerifyConfig& c) {
  SuiteResult s{"lemma3_covering", true, 0, "", 0};
  std::mt19937_64 rng(c.seed ^ 0x1e3a3ULL);
  for (int i = 0; i < c.samples && s.passed; ++i) {
    const auto b = random_infinite_set(rng);
    const auto x = random_finite_set(rng, -10, 30, 4);
    int u = static_cast<int>(draw_between(rng, 0, 3));
    const int v = static_cast<int>(draw_between(rng, 0, 3));
    if (u + v == 0) u = 1;
    const auto out = lemma3_check(b, x, u, v, 400, 12);
    ++s.checked;
    if (!out.holds()) {
      s.passed = false;
      s.counterexample = "B = " + b.to_string() + ", X = " + describe(x) + ", u = " + std::to_string(u) +
                         ", v = " + std::to_string(v);
    }
  }
  return s;
}

SuiteResult kneser_suite(const VerifyConfig& c) {
  auto s = exhaustive_suite("kneser_theorem2", c.max_modulus, 2, [](Int g, std::span<const std::uint64_t> m) {
    return kneser_witness(ResidueSet::from_bits(g, m[0]), ResidueSet::from_bits(g, m[1])).holds();
  });
  std::mt19937_64 rng(c.seed ^ 0x4b4eULL);
  for (int i = 0; i < 10000 && s.passed; ++i) {
    const Int g = draw_between(rng, 9, 16);
    const std::uint64_t full = (std::uint64_t{1} << g) - 1;
    const auto b = ResidueSet::from_bits(g, 1 + rng() % full);
    const auto cc = ResidueSet::from_bits(g, 1 + rng() % full);
    ++s.checked;
    if (!kneser_witness(b, cc).holds()) {
      s.passed = false;
      s.counterexample = describe(b) + " ; " + describe(cc);
    }
  }
  return s;
}

SuiteResult corollary1_suite(const VerifyConfig& c) {
  return exhaustive_suite("corollary1_triples", std::min<Int>(c.max_modulus, 6), 3,
                          [](Int g, std::span<const std::uint64_t> m) {
                            const std::vector<ResidueSet> sets{ResidueSet::from_bits(g, m[0]),
                                                               ResidueSet::from_bits(g, m[1]),
                                                               ResidueSet::from_bits(g, m[2])};
                            const auto sum = sum_residue(sum_residue(sets[0], sets[1]), sets[2]);
                            if (is_degenerate(sum)) return true;
                            return sum_lower_bound_check(sets);
                          });
}

SuiteResult prop1_suite(const VerifyConfig& c) {
  auto s = exhaustive_suite("prop1_equivalence", c.lemma1_modulus, 1, [](Int g, std::span<const std::uint64_t> m) {
    const FiniteIntSet b(ResidueSet::from_bits(g, m[0]).members());
    const auto out = prop1_check(b, g);
    // The least witness, when one exists, is the least period of B^(g) and
    // therefore divides g.
    return out.holds() && (out.witness == 0 || g % out.witness == 0);
  });
  std::mt19937_64 rng(c.seed ^ 0x9a71ULL);
  for (int i = 0; i < c.samples && s.passed; ++i) {
    const auto set = random_infinite_set(rng);
    // Drop exceptional elements outside the periodic classes so the set is saturable.
    std::vector<Int> keep;
    for (Int e : set.exceptional())
      if (set.residue_mask()[static_cast<std::size_t>(mod_floor(e, set.modulus()))]) keep.push_back(e);
    const auto sat = EventuallyPeriodicSet::make(keep, set.threshold(), set.modulus(), set.residues());
    ++s.checked;
    const Int m = minimal_saturation_modulus(sat);
    if (m != sat.modulus() || is_degenerate(project(sat, m))) {
      s.passed = false;
      s.counterexample = "S = " + sat.to_string() + ", minimal modulus " + std::to_string(m);
    }
  }
  return s;
}

SuiteResult prop2_suite(const VerifyConfig& c) {
  return exhaustive_suite("prop2_nondegeneracy", c.max_modulus, 2, [](Int g, std::span<const std::uint64_t> m) {
    return prop2_check(ResidueSet::from_bits(g, m[0]), ResidueSet::from_bits(g, m[1]));
  });
}

SuiteResult containment_suite(const VerifyConfig& c) {
  return exhaustive_suite("stabilizer_containment", c.max_modulus, 2, [](Int g, std::span<const std::uint64_t> m) {
    return stabilizer_containment_check(ResidueSet::from_bits(g, m[0]), ResidueSet::from_bits(g, m[1]));
  });
}

SuiteResult identities_suite(const VerifyConfig& c) {
  SuiteResult s{"formula_identities", true, 0, "", 0};
  auto fail = [&](std::string what) {
    if (s.passed) s.counterexample = std::move(what);
    s.passed = false;
  };
  for (int h = 1; h <= 20; ++h)
    for (Int k = 1; k <= 20; ++k, ++s.checked)
      if (nash_original_sum(h, k).value != nash_general(h, k).value)
        fail("nash_original_sum != nash_general at h=" + std::to_string(h) + ", k=" + std::to_string(k));
  for (int h = 1; h <= 30; ++h)
    for (Int d = 0; d <= 10; ++d, ++s.checked)
      if (farhi_d(h, d).value != farhi_d_sum(h, d))
        fail("farhi_d closed form != sum at h=" + std::to_string(h) + ", d=" + std::to_string(d));
  for (int h = 1; h <= 50; ++h) {
    for (Int eta = 1; eta <= 20; ++eta, ++s.checked) {
      BigInt closed = farhi_eta(h, eta).value;
      if (c.inject_wrong_formula) closed = BigInt(eta) * (h * h - 1) + h;
      const BigInt product = BigInt(eta * (h - 1) + 1) * (h + 1);
      if (closed != product)
        fail("farhi_eta closed form " + closed.str() + " != (eta(h-1)+1)(h+1) = " + product.str() +
             " at h=" + std::to_string(h) + ", eta=" + std::to_string(eta));
    }
    ++s.checked;
    const BigInt single = BigInt(h) * (h + 3) / 2;
    if (nash_general(h, 1).value != single || farhi_mu(h, 1).value != single || farhi_d(h, 0).value != single)
      fail("k=1 / mu=1 / d=0 consistency at h=" + std::to_string(h));
  }
  return s;
}

SuiteResult saturation_suite(const VerifyConfig& c) {
  SuiteResult s{"saturation_of_sums", true, 0, "", 0};
  std::mt19937_64 rng(c.seed ^ 0x5a7ULL);
  for (int i = 0; i < c.samples && s.passed; ++i) {
    const auto b = random_infinite_set(rng);
    const auto cc = random_infinite_set(rng);
    const Int g = draw_between(rng, 1, 10);
    ++s.checked;
    if (!equal_mod_finite(saturate_mod(sumset(b, cc), g), sumset(saturate_mod(b, g), cc))) {
      s.passed = false;
      s.counterexample = "B = " + b.to_string() + ", C = " + cc.to_string() + ", g = " + std::to_string(g);
    }
  }
  return s;
}

}  // namespace

bool VerifySummary::all_passed() const noexcept {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

VerifySummary verify_suites(const VerifyConfig& config) {
  using Suite = SuiteResult (*)(const VerifyConfig&);
  constexpr Suite suites[] = {lemma1_suite, lemma2_suite,       lemma3_suite,      kneser_suite,
                              corollary1_suite, prop1_suite,    prop2_suite,       containment_suite,
                              identities_suite, saturation_suite};
  VerifySummary out;
  for (Suite suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    auto r = suite(config);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.suites.push_back(std::move(r));
  }
  return out;
}

}  // namespace addbasis
