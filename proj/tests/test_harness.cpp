#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

#include "addbasis/harness.hpp"

using namespace addbasis;

namespace {

const char* kMicro = R"({"entries": [{"name": "micro", "basis": {"exceptional": [0, 1], "threshold": 2,
  "modulus": 2, "residues": [0]}, "remove": [2]}]})";

CorpusEntry micro_entry(FiniteIntSet x) {
  CorpusEntry e;
  e.name = "micro";
  e.basis = EPS::make({0, 1}, 2, 2, {0});
  e.remove = std::move(x);
  return e;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::ParseError;
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST(LoadCorpus, MinimalValidFile) {
  const auto entries = parse_corpus(kMicro);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].name, "micro");
  EXPECT_EQ(entries[0].basis, EPS::make({0, 1}, 2, 2, {0}));
  EXPECT_EQ(entries[0].remove, (FiniteIntSet{2}));
  EXPECT_EQ(entries[0].order_cap, kDefaultOrderCap);
  EXPECT_EQ(entries[0].window, kDefaultWindow);
}

TEST(LoadCorpus, BareArrayAccepted) {
  const auto entries = parse_corpus(R"([{"name": "n", "basis": {"exceptional": [], "threshold": 0,
    "modulus": 1, "residues": [0]}, "remove": [3]}])");
  EXPECT_EQ(entries.size(), 1u);
}

TEST(LoadCorpus, RemoveOutsideBasisNamesElement) {
  try {
    (void)parse_corpus(R"({"entries": [{"name": "bad", "basis": {"exceptional": [0, 1], "threshold": 2,
      "modulus": 2, "residues": [0]}, "remove": [3]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ValidationError);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("bad"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("remove"), std::string::npos) << msg;
  }
}

TEST(LoadCorpus, Errors) {
  EXPECT_EQ(code_of([] { (void)parse_corpus("{not json"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { (void)parse_corpus(R"({"entries": [{"name": "x"}]})"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] {
              (void)parse_corpus(R"({"entries": [{"name": "x", "basis": {"exceptional": [], "threshold": 0,
                "modulus": 0, "residues": []}, "remove": [0]}]})");
            }),
            Errc::ValidationError);
  EXPECT_EQ(code_of([] {
              (void)parse_corpus(R"({"entries": [{"name": "x", "basis": {"exceptional": [], "threshold": 0,
                "modulus": 2, "residues": [5]}, "remove": [0]}]})");
            }),
            Errc::ValidationError);
  EXPECT_EQ(code_of([] {
              (void)parse_corpus(R"({"entries": [{"name": "x", "basis": {"exceptional": [], "threshold": 0,
                "modulus": 1, "residues": [0]}, "remove": [1], "order_cap": 0}]})");
            }),
            Errc::ValidationError);
  EXPECT_EQ(code_of([] { (void)load_corpus("/nonexistent/corpus.json"); }), Errc::ParseError);
}

TEST(LoadCorpus, CapEnvironmentOverride) {
  ::setenv("ADDBASIS_CAP", "17", 1);
  EXPECT_EQ(default_order_cap(), 17);
  EXPECT_EQ(parse_corpus(kMicro)[0].order_cap, 17);
  ::setenv("ADDBASIS_CAP", "junk", 1);
  EXPECT_EQ(default_order_cap(), kDefaultOrderCap);
  ::unsetenv("ADDBASIS_CAP");
}

TEST(GoldenCorpus, SizeRangesAndRoundTrip) {
  const auto entries = load_corpus(ADDBASIS_GOLDEN_CORPUS);
  EXPECT_GE(entries.size(), 50u);
  for (const auto& e : entries) EXPECT_LE(e.basis.modulus(), 12) << e.name;
  const auto again = parse_corpus(emit_corpus(entries));
  EXPECT_EQ(again, entries);
  EXPECT_EQ(emit_corpus(again), emit_corpus(entries));
}

TEST(GenerateCorpus, DeterministicPerSeed) {
  EXPECT_EQ(emit_corpus(generate_corpus(9, 10)), emit_corpus(generate_corpus(9, 10)));
  EXPECT_NE(emit_corpus(generate_corpus(9, 10)), emit_corpus(generate_corpus(10, 10)));
  for (const auto& e : generate_corpus(9, 10)) {
    EXPECT_LE(e.basis.modulus(), 12);
    EXPECT_GE(e.remove.size(), 1u);
    EXPECT_LE(e.remove.size(), 4u);
    for (Int x : e.remove.elements()) EXPECT_TRUE(e.basis.contains(x));
  }
}

TEST(RunEntry, MicroInstance) {
  const auto r = run_entry(micro_entry({2}));
  EXPECT_EQ(r.status, EntryStatus::Ok);
  EXPECT_EQ(r.h, 2);
  EXPECT_EQ(r.exact, 2);
  EXPECT_EQ(r.params.k, 1);
  EXPECT_EQ(r.params.d, 0);
  EXPECT_EQ(r.params.eta, 1);
  EXPECT_EQ(r.params.mu, 1);
  EXPECT_EQ(r.find("nash")->bound.value, 5);
  EXPECT_EQ(r.find("farhi_d")->bound.value, 5);
  EXPECT_EQ(r.find("farhi_eta")->bound.value, 6);
  EXPECT_EQ(r.find("farhi_mu")->bound.value, 5);
  for (const auto& b : r.bounds) EXPECT_GE(b.slack, 0) << b.bound.name;
  EXPECT_TRUE(r.decomposition);
  EXPECT_TRUE(r.theorem5);
  EXPECT_TRUE(r.violations.empty());
}

TEST(RunEntry, SkipWhenRemovalBreaksBasis) {
  const auto r = run_entry(micro_entry({1}));
  EXPECT_EQ(r.status, EntryStatus::Skipped);
  ASSERT_TRUE(r.skip_code.has_value());
  EXPECT_EQ(*r.skip_code, Errc::NotABasis);
  EXPECT_FALSE(r.reason.empty());
}

TEST(RunEntry, SkipWhenCapExceeded) {
  auto e = micro_entry({2});
  e.basis = EPS::make({0, 1}, 100, 100, {0});
  e.remove = FiniteIntSet{100};
  e.order_cap = 10;
  const auto r = run_entry(e);
  EXPECT_EQ(r.status, EntryStatus::Skipped);
  EXPECT_EQ(*r.skip_code, Errc::CapExceeded);
  const auto s = summarize({r});
  EXPECT_EQ(s.skipped_cap, 1);
  EXPECT_EQ(s.exit_code(), 3);
}

TEST(RunEntry, ApFlagMismatchIsAViolation) {
  auto e = micro_entry({2});
  e.ap_flag = false;
  const auto r = run_entry(e);
  EXPECT_EQ(r.status, EntryStatus::Violation);
  EXPECT_EQ(summarize({r}).exit_code(), 1);
}

TEST(EmitReport, EmptyIsHeaderOnly) {
  EXPECT_EQ(emit_report({}, ReportFormat::Csv),
            "name,h,exact,k,d,eta,mu,nash,farhi_d,farhi_eta,farhi_mu,remark_d,cor2,min_bound,min_slack\n");
  const auto doc = nlohmann::json::parse(emit_report({}, ReportFormat::Json));
  EXPECT_TRUE(doc["rows"].empty());
  EXPECT_EQ(doc["columns"].size(), std::size(kReportColumns));
}

TEST(EmitReport, OneEntryOneRow) {
  const auto rows = split_csv(emit_report({run_entry(micro_entry({2}))}, ReportFormat::Csv));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"micro", "2", "2", "1", "0", "1", "1", "5", "5", "6", "5", "", "5", "5",
                                               "3"}));
  const auto md = emit_report({run_entry(micro_entry({2}))}, ReportFormat::Markdown);
  EXPECT_NE(md.find("| micro |"), std::string::npos);
  EXPECT_EQ(code_of([] { (void)parse_format("xml"); }), Errc::UnknownFormat);
  EXPECT_EQ(parse_format("md"), ReportFormat::Markdown);
  EXPECT_EQ(parse_format("markdown"), ReportFormat::Markdown);
}

TEST(EmitReport, SkipsAreListed) {
  const auto text = emit_report({run_entry(micro_entry({2})), run_entry(micro_entry({1}))}, ReportFormat::Markdown);
  EXPECT_NE(text.find("NotABasis"), std::string::npos);
  const auto doc = nlohmann::json::parse(
      emit_report({run_entry(micro_entry({2})), run_entry(micro_entry({1}))}, ReportFormat::Json));
  ASSERT_EQ(doc["skipped"].size(), 1u);
  EXPECT_FALSE(doc["skipped"][0]["reason"].get<std::string>().empty());
}

TEST(EmitReport, CsvAndJsonAgreeOnGoldenCorpus) {
  const auto reports = run_corpus(load_corpus(ADDBASIS_GOLDEN_CORPUS));
  const auto csv = split_csv(emit_report(reports, ReportFormat::Csv));
  const auto doc = nlohmann::json::parse(emit_report(reports, ReportFormat::Json));
  ASSERT_EQ(csv.size(), doc["rows"].size() + 1);
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& row = doc["rows"][i];
    for (std::size_t c = 0; c < std::size(kReportColumns); ++c) {
      const auto& v = row[kReportColumns[c]];
      const std::string as_text = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
      EXPECT_EQ(as_text, csv[i + 1][c]) << kReportColumns[c];
    }
  }
}

TEST(RunCorpus, DeterministicAndModeIndependent) {
  const auto entries = load_corpus(ADDBASIS_GOLDEN_CORPUS);
  const auto a = emit_report(run_corpus(entries, Execution::Parallel), ReportFormat::Json);
  const auto b = emit_report(run_corpus(entries, Execution::Parallel), ReportFormat::Json);
  const auto c = emit_report(run_corpus(entries, Execution::Serial), ReportFormat::Json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Summary, ExitCodes) {
  EXPECT_EQ(RunSummary{}.exit_code(), 0);
  EXPECT_EQ((RunSummary{3, 0, 2, 0}.exit_code()), 0);
  EXPECT_EQ((RunSummary{3, 1, 0, 1}.exit_code()), 1);
  EXPECT_EQ((RunSummary{3, 0, 0, 1}.exit_code()), 3);
}

TEST(VerifySuites, DefaultConfigPasses) {
  const auto s = verify_suites({});
  for (const auto& suite : s.suites) EXPECT_TRUE(suite.passed) << suite.name << ": " << suite.counterexample;
  EXPECT_TRUE(s.all_passed());
  EXPECT_GE(s.suites.size(), 8u);
}

TEST(VerifySuites, SeedReproducible) {
  VerifyConfig config;
  config.seed = 77;
  config.max_modulus = 5;
  config.samples = 50;
  const auto a = verify_suites(config);
  const auto b = verify_suites(config);
  ASSERT_EQ(a.suites.size(), b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    EXPECT_EQ(a.suites[i].name, b.suites[i].name);
    EXPECT_EQ(a.suites[i].checked, b.suites[i].checked);
    EXPECT_EQ(a.suites[i].passed, b.suites[i].passed);
    EXPECT_EQ(a.suites[i].counterexample, b.suites[i].counterexample);
  }
}

TEST(VerifySuites, InjectedWrongFormulaFails) {
  VerifyConfig config;
  config.max_modulus = 5;
  config.samples = 20;
  config.inject_wrong_formula = true;
  const auto s = verify_suites(config);
  EXPECT_FALSE(s.all_passed());
  bool found = false;
  for (const auto& suite : s.suites)
    if (!suite.passed) {
      found = true;
      EXPECT_FALSE(suite.counterexample.empty());
    }
  EXPECT_TRUE(found);
}
