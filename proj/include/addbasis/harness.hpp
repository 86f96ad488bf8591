#pragma once

// Corpus files, the removal pipeline over a corpus, invariant suites, and
// report emission.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addbasis/basis.hpp"
#include "addbasis/bounds.hpp"
#include "addbasis/residue.hpp"

namespace addbasis {

struct CorpusEntry {
  std::string name;
  EventuallyPeriodicSet basis;
  FiniteIntSet remove;
  int order_cap = kDefaultOrderCap;
  Int window = kDefaultWindow;
  std::optional<bool> ap_flag;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/// Order cap for entries that do not set one: ADDBASIS_CAP if set and
/// positive, else kDefaultOrderCap.
int default_order_cap();

/// Throws ParseError (malformed JSON or missing field) and ValidationError
/// (remove not inside basis, bad modulus, non-positive caps); messages name
/// the entry and the field.
std::vector<CorpusEntry> parse_corpus(std::string_view json_text);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
std::string emit_corpus(const std::vector<CorpusEntry>& entries);

/// Random bases: modulus <= 12, at least one periodic residue, up to four
/// exceptional elements, order <= 8, and X drawn from A with |X| <= 4.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int count);

enum class EntryStatus { Ok, Violation, Skipped };

struct BoundSlack {
  BoundValue bound;
  BigInt slack;  // bound - exact
};

struct RemovalReport {
  std::string name;
  EntryStatus status = EntryStatus::Skipped;
  std::optional<Errc> skip_code;
  std::string reason;  // skip reason or violation list
  int h = 0;
  int exact = 0;
  RemovalParameters params;
  std::vector<BoundSlack> bounds;  // ascending by value
  bool decomposition = false;
  bool theorem5 = false;
  std::vector<std::string> violations;

  std::optional<BoundSlack> find(std::string_view bound_name) const;
};

/// A failing check marks the entry as a violation; NotABasis and
/// CapExceeded mark it skipped. Never throws for those conditions.
RemovalReport run_entry(const CorpusEntry& entry);
/// Entries are processed concurrently; output is in input order.
std::vector<RemovalReport> run_corpus(const std::vector<CorpusEntry>& entries,
                                      Execution mode = Execution::Parallel);

enum class ReportFormat { Csv, Markdown, Json };

/// "csv", "md", "json". Throws UnknownFormat.
ReportFormat parse_format(std::string_view text);

inline constexpr const char* kReportColumns[] = {"name",    "h",        "exact",    "k",         "d",
                                                 "eta",     "mu",       "nash",     "farhi_d",   "farhi_eta",
                                                 "farhi_mu", "remark_d", "cor2",     "min_bound", "min_slack"};

/// Rows sorted by entry name; skipped entries are listed separately
/// (JSON "skipped", Markdown section) and omitted from CSV.
std::string emit_report(std::vector<RemovalReport> reports, ReportFormat format);

struct RunSummary {
  int ok = 0;
  int violations = 0;
  int skipped_not_basis = 0;
  int skipped_cap = 0;

  /// 0 all pass, 1 violation, 3 cap exceeded somewhere.
  int exit_code() const noexcept;
};

RunSummary summarize(const std::vector<RemovalReport>& reports);

struct VerifyConfig {
  std::uint64_t seed = 1;
  Int max_modulus = 8;     // exhaustive pairs; triples use min(max_modulus, 6)
  Int lemma1_modulus = 10;
  Int lemma2_range = 12;   // X ⊆ [0, lemma2_range]
  int samples = 200;
  /// Test hook: evaluate a deliberately wrong closed form in the identity suite.
  bool inject_wrong_formula = false;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  std::string counterexample;
  double seconds = 0;
};

struct VerifySummary {
  std::vector<SuiteResult> suites;

  bool all_passed() const noexcept;
};

VerifySummary verify_suites(const VerifyConfig& config);

}  // namespace addbasis
