// addbasis: command-line front end for the removal pipeline, bound tables,
// verification suites and corpus generation.
//
// Exit codes: 0 all pass, 1 assertion violation, 2 input error,
// 3 order cap exceeded somewhere.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "addbasis/harness.hpp"

namespace {

using namespace addbasis;
using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

void print_summary(const RunSummary& s, const std::vector<RemovalReport>& reports) {
  std::cerr << "entries: " << reports.size() << ", ok: " << s.ok << ", violations: " << s.violations
            << ", skipped (not a basis): " << s.skipped_not_basis << ", skipped (cap): " << s.skipped_cap << "\n";
  for (const auto& r : reports) {
    if (r.status == EntryStatus::Skipped) std::cerr << "  skip " << r.name << ": " << r.reason << "\n";
    if (r.status == EntryStatus::Violation)
      std::cerr << "  VIOLATION " << r.name << ": " << r.reason << " (a theorem would be false: implementation bug)\n";
  }
}

int cmd_analyze(const std::string& path) {
  const auto entries = load_corpus(path);
  for (const auto& e : entries) {
    std::cout << e.name << "\n  A = " << e.basis.to_string() << "\n";
    if (e.basis.is_infinite()) {
      const auto dens = lower_density(e.basis);
      std::cout << "  density = " << dens.num << "/" << dens.den << ", eventual gcd = " << eventual_gcd(e.basis) << "\n";
    }
    try {
      const auto r = order(e.basis, e.order_cap);
      std::cout << "  G(A) = " << r.order << "\n";
    } catch (const Error& err) {
      std::cout << "  G(A): " << err.what() << "\n";
    }
    try {
      std::cout << "  saturation modulus = " << minimal_saturation_modulus(e.basis) << "\n";
    } catch (const Error& err) {
      std::cout << "  saturation modulus: " << err.what() << "\n";
    }
    const auto p = removal_parameters(e.basis, e.remove);
    std::cout << "  |X| = " << p.k << ", d = " << p.d << ", eta = " << p.eta << ", mu = " << p.mu
              << (p.arithmetic_progression ? ", X is an arithmetic progression" : "") << "\n";
  }
  return 0;
}

int cmd_remove(const std::string& path) {
  const auto entries = load_corpus(path);
  const auto reports = run_corpus(entries);
  for (const auto& r : reports) {
    std::cout << r.name << ": ";
    if (r.status == EntryStatus::Skipped) {
      std::cout << "skipped (" << r.reason << ")\n";
      continue;
    }
    std::cout << "G(A) = " << r.h << ", G(A\\X) = " << r.exact << ", k = " << r.params.k << ", d = " << r.params.d
              << ", eta = " << r.params.eta << ", mu = " << r.params.mu << "\n";
    for (const auto& b : r.bounds)
      std::cout << "    " << b.bound.name << " = " << b.bound.value << " (slack " << b.slack << ")\n";
    std::cout << "    decomposition " << (r.decomposition ? "ok" : "FAILED") << ", augmented-set order "
              << (r.theorem5 ? "ok" : "FAILED") << "\n";
  }
  const auto s = summarize(reports);
  print_summary(s, reports);
  return s.exit_code();
}

int cmd_report(const std::string& path, const std::string& format) {
  const auto fmt = parse_format(format);
  const auto reports = run_corpus(load_corpus(path));
  std::cout << emit_report(reports, fmt);
  const auto s = summarize(reports);
  print_summary(s, reports);
  return s.exit_code();
}

int cmd_bounds(int h, Int k, std::optional<Int> d, std::optional<Int> eta, std::optional<Int> mu, bool ap,
               const std::string& format) {
  const auto fmt = parse_format(format);
  std::vector<BoundValue> rows{nash_general(h, k)};
  if (d) rows.push_back(farhi_d(h, *d));
  if (eta) rows.push_back(farhi_eta(h, *eta));
  if (mu) rows.push_back(farhi_mu(h, *mu));
  if (d && *d >= 1) rows.push_back(remark_d(h, *d));
  if (ap) rows.push_back(corollary2(h, k));
  if (k == 1)
    for (auto& b : historical_single(h)) rows.push_back(std::move(b));
  const auto mag = magnitude_reference(h, k);

  std::ostringstream os;
  switch (fmt) {
    case ReportFormat::Csv:
      os << "name,value,certified\n";
      for (const auto& b : rows) os << b.name << "," << b.value << "," << (b.certified ? "yes" : "no") << "\n";
      os << "magnitude_lower_jia," << mag.jia_lower << ",no\n";
      os << "magnitude_lower_nathanson_nash," << mag.nathanson_nash_lower << ",no\n";
      os << "magnitude_upper," << mag.upper << ",no\n";
      break;
    case ReportFormat::Markdown:
      os << "| name | value | certified |\n|---|---|---|\n";
      for (const auto& b : rows) os << "| " << b.name << " | " << b.value << " | " << (b.certified ? "yes" : "no") << " |\n";
      os << "| magnitude_lower_jia | " << mag.jia_lower << " | no |\n";
      os << "| magnitude_lower_nathanson_nash | " << mag.nathanson_nash_lower << " | no |\n";
      os << "| magnitude_upper | " << mag.upper << " | no |\n";
      break;
    case ReportFormat::Json: {
      json doc = json::array();
      for (const auto& b : rows)
        doc.push_back({{"name", b.name}, {"value", b.value.str()}, {"certified", b.certified}, {"reference", b.reference}});
      doc.push_back({{"name", "magnitude_lower_jia"}, {"reference", mag.jia_lower}, {"certified", false}});
      doc.push_back(
          {{"name", "magnitude_lower_nathanson_nash"}, {"reference", mag.nathanson_nash_lower}, {"certified", false}});
      doc.push_back({{"name", "magnitude_upper"}, {"reference", mag.upper}, {"certified", false}});
      os << doc.dump(2) << "\n";
      break;
    }
  }
  std::cout << os.str();
  return 0;
}

int cmd_verify(const VerifyConfig& config) {
  const auto summary = verify_suites(config);
  for (const auto& s : summary.suites) {
    std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << "  checked=" << s.checked << "  " << s.seconds << "s";
    if (!s.passed) std::cout << "  counterexample: " << s.counterexample;
    std::cout << "\n";
  }
  return summary.all_passed() ? 0 : kExitViolation;
}

int cmd_gen(std::uint64_t seed, int count, const std::string& output) {
  const auto text = emit_corpus(generate_corpus(seed, count));
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw Error(Errc::ParseError, "cannot write " + output);
    out << text;
  }
  return 0;
}

int cmd_kneser(Int g, bool exhaustive, std::uint64_t seed) {
  if (exhaustive) {
    const auto r = exhaustive_check(g, 2, [g](std::span<const std::uint64_t> m) {
      return kneser_witness(ResidueSet::from_bits(g, m[0]), ResidueSet::from_bits(g, m[1])).holds();
    });
    std::cout << "Z/" << g << ": " << r.checked << " pairs checked, " << r.failures << " failures\n";
    return r.ok() ? 0 : kExitViolation;
  }
  if (g > 64) throw Error(Errc::PreconditionViolated, "sampling supports g <= 64");
  std::mt19937_64 rng(seed);
  const std::uint64_t full = g == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g) - 1;
  int failures = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const auto b = ResidueSet::from_bits(g, 1 + rng() % full);
    const auto c = ResidueSet::from_bits(g, 1 + rng() % full);
    if (!kneser_witness(b, c).holds()) ++failures;
  }
  std::cout << "Z/" << g << ": " << samples << " sampled pairs checked, " << failures << " failures\n";
  return failures == 0 ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on additive bases and the order of A \\ X"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "md";

  auto* analyze = app.add_subcommand("analyze", "Describe each corpus entry: canonical form, G(A), parameters");
  analyze->add_option("file", path, "corpus JSON")->required();

  auto* remove = app.add_subcommand("remove", "Run the removal pipeline and print per-entry detail");
  remove->add_option("file", path, "corpus JSON")->required();

  auto* report = app.add_subcommand("report", "Run the removal pipeline and emit the bound table");
  report->add_option("file", path, "corpus JSON")->required();
  report->add_option("--format", format, "csv, md or json");

  int h = 0;
  Int k = 0;
  std::optional<Int> d, eta, mu;
  bool ap = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bounds->set_help_flag("--help", "Print this help message and exit");
  bounds->add_option("--h", h, "order of A")->required();
  bounds->add_option("--k", k, "|X|")->required();
  bounds->add_option("--d", d, "diam(X)/delta(X)");
  bounds->add_option("--eta", eta, "eta");
  bounds->add_option("--mu", mu, "mu");
  bounds->add_flag("--ap", ap, "X is an arithmetic progression");
  bounds->add_option("--format", format, "csv, md or json");

  VerifyConfig config;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--seed", config.seed, "seed for the sampled suites");
  verify->add_option("--max-modulus", config.max_modulus, "largest modulus for exhaustive pair suites");
  verify->add_option("--samples", config.samples, "samples per randomized suite");

  std::uint64_t seed = 1;
  int count = 50;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a random corpus");
  gen->add_option("--seed", seed, "seed")->required();
  gen->add_option("--count", count, "number of entries")->required();
  gen->add_option("-o,--output", output, "write to file instead of stdout");

  Int modulus = 0;
  bool exhaustive = false;
  auto* kneser = app.add_subcommand("kneser", "Check the second theorem of Kneser in Z/gZ");
  kneser->add_option("--modulus", modulus, "g")->required()->check(CLI::Range(1, 64));
  kneser->add_flag("--exhaustive", exhaustive, "every pair of nonempty subsets (g <= 20)");
  kneser->add_option("--seed", seed, "seed when sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(path);
    if (*remove) return cmd_remove(path);
    if (*report) return cmd_report(path, format);
    if (*bounds) return cmd_bounds(h, k, d, eta, mu, ap, format);
    if (*verify) return cmd_verify(config);
    if (*gen) return cmd_gen(seed, count, output);
    if (*kneser) return cmd_kneser(modulus, exhaustive, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
