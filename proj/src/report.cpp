#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "addbasis/harness.hpp"

namespace addbasis {

using nlohmann::json;

std::optional<BoundSlack> RemovalReport::find(std::string_view bound_name) const {
  for (const auto& b : bounds)
    if (b.bound.name == bound_name) return b;
  return std::nullopt;
}

RemovalReport run_entry(const CorpusEntry& entry) {
  RemovalReport r;
  r.name = entry.name;
  try {
    const auto full = order(entry.basis, entry.order_cap);
    r.h = full.order;
    const auto removed = remove_and_order(entry.basis, entry.remove, entry.order_cap);
    r.exact = removed.order;
  } catch (const Error& e) {
    if (e.code() != Errc::NotABasis && e.code() != Errc::CapExceeded) throw;
    r.status = EntryStatus::Skipped;
    r.skip_code = e.code();
    r.reason = e.what();
    return r;
  }

  r.params = removal_parameters(entry.basis, entry.remove);
  if (entry.ap_flag && *entry.ap_flag != r.params.arithmetic_progression)
    r.violations.push_back("ap_flag disagrees with X");

  for (auto& b : compare_all(r.h, r.params)) {
    BigInt slack = b.value - r.exact;
    if (b.certified && slack < 0) r.violations.push_back(b.name + " bound " + b.value.str() + " < exact " + std::to_string(r.exact));
    r.bounds.push_back({std::move(b), std::move(slack)});
  }

  r.decomposition = decomposition_check(entry.basis, entry.remove, r.h);
  if (!r.decomposition) r.violations.push_back("decomposition of hA is not cofinite");
  r.theorem5 = theorem5_construction_check(entry.basis, entry.remove, entry.order_cap);
  if (!r.theorem5) r.violations.push_back("augmented set exceeds order h*mu");

  r.status = r.violations.empty() ? EntryStatus::Ok : EntryStatus::Violation;
  std::ostringstream os;
  for (std::size_t i = 0; i < r.violations.size(); ++i) os << (i ? "; " : "") << r.violations[i];
  r.reason = os.str();
  return r;
}

std::vector<RemovalReport> run_corpus(const std::vector<CorpusEntry>& entries, Execution mode) {
  std::vector<RemovalReport> out(entries.size());
  const auto n = static_cast<std::int64_t>(entries.size());
  if (mode == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_entry(entries[static_cast<std::size_t>(i)]);
    return out;
  }
  // Exceptions cannot cross the parallel region; carry the first one out.
  std::vector<std::exception_ptr> errors(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = run_entry(entries[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  if (text == "json") return ReportFormat::Json;
  throw Error(Errc::UnknownFormat, std::string(text));
}

namespace {

// One row of report cells in kReportColumns order; empty string means n/a.
std::vector<std::string> row_cells(const RemovalReport& r) {
  auto bound = [&](const char* name) -> std::string {
    auto b = r.find(name);
    return b ? b->bound.value.str() : std::string();
  };
  std::string min_bound, min_slack;
  for (const auto& b : r.bounds) {
    if (!b.bound.certified) continue;
    min_bound = b.bound.value.str();
    min_slack = b.slack.str();
    break;
  }
  return {r.name,
          std::to_string(r.h),
          std::to_string(r.exact),
          std::to_string(r.params.k),
          std::to_string(r.params.d),
          std::to_string(r.params.eta),
          std::to_string(r.params.mu),
          bound("nash"),
          bound("farhi_d"),
          bound("farhi_eta"),
          bound("farhi_mu"),
          bound("remark_d"),
          bound("cor2"),
          min_bound,
          min_slack};
}

json cell_json(std::size_t column, const std::string& cell) {
  if (column == 0) return cell;
  if (cell.empty()) return nullptr;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(cell, &used);
    if (used == cell.size()) return v;
  } catch (const std::out_of_range&) {
  }
  return cell;
}

}  // namespace

std::string emit_report(std::vector<RemovalReport> reports, ReportFormat format) {
  std::sort(reports.begin(), reports.end(),
            [](const RemovalReport& a, const RemovalReport& b) { return a.name < b.name; });
  std::vector<const RemovalReport*> rows, skipped;
  for (const auto& r : reports) (r.status == EntryStatus::Skipped ? skipped : rows).push_back(&r);

  std::ostringstream os;
  switch (format) {
    case ReportFormat::Csv: {
      bool first = true;
      for (const char* c : kReportColumns) {
        os << (first ? "" : ",") << c;
        first = false;
      }
      os << "\n";
      for (const auto* r : rows) {
        const auto cells = row_cells(*r);
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << "\n";
      }
      break;
    }
    case ReportFormat::Markdown: {
      os << "|";
      for (const char* c : kReportColumns) os << " " << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < std::size(kReportColumns); ++i) os << "---|";
      os << "\n";
      for (const auto* r : rows) {
        os << "|";
        for (const auto& c : row_cells(*r)) os << " " << (c.empty() ? "-" : c) << " |";
        os << "\n";
      }
      if (!skipped.empty()) {
        os << "\nSkipped:\n\n";
        for (const auto* r : skipped) os << "- " << r->name << ": " << r->reason << "\n";
      }
      break;
    }
    case ReportFormat::Json: {
      json doc{{"columns", json::array()}, {"rows", json::array()}, {"skipped", json::array()}};
      for (const char* c : kReportColumns) doc["columns"].push_back(c);
      for (const auto* r : rows) {
        const auto cells = row_cells(*r);
        json row = json::object();
        for (std::size_t i = 0; i < cells.size(); ++i) row[kReportColumns[i]] = cell_json(i, cells[i]);
        row["status"] = r->status == EntryStatus::Ok ? "ok" : "violation";
        if (!r->violations.empty()) row["violations"] = r->violations;
        doc["rows"].push_back(std::move(row));
      }
      for (const auto* r : skipped) doc["skipped"].push_back(json{{"name", r->name}, {"reason", r->reason}});
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

int RunSummary::exit_code() const noexcept {
  if (violations > 0) return 1;
  if (skipped_cap > 0) return 3;
  return 0;
}

RunSummary summarize(const std::vector<RemovalReport>& reports) {
  RunSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case EntryStatus::Ok: ++s.ok; break;
      case EntryStatus::Violation: ++s.violations; break;
      case EntryStatus::Skipped:
        if (r.skip_code == Errc::CapExceeded) ++s.skipped_cap;
        else ++s.skipped_not_basis;
        break;
    }
  }
  return s;
}

}  // namespace addbasis
