#pragma once

// Bundles the analyses run by `contextlab check` and renders them as text or
// as JSON (schema in docs/report-schema.md).

#include <contextlab/coupling.hpp>
#include <contextlab/hidden_variable.hpp>
#include <contextlab/model.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contextlab {

struct AnalysisSelection {
  bool cbd = true;
  bool fine = true;
  bool octuple = true;
  bool nonsignaling = true;
};

struct ConnectionSummary {
  std::string content;
  std::vector<std::string> contexts;
  Rational maximal_coupling_value;
};

struct Report {
  System system;
  ConsistencyReport consistency;
  std::vector<ConnectionSummary> connections;
  std::optional<std::vector<MarginalComparison>> nonsignaling;
  std::optional<ContextualityVerdict> cbd;
  std::optional<ModelVerdict> fine;
  std::optional<ModelVerdict> octuple;
};

Report analyze(const System& system, const AnalysisSelection& selection = {});

/// Deterministic: fixed key order, rationals as "num/den".
std::string render_json(const Report& report);

std::string render_text(const Report& report, bool color);

/// Verdict-level view of a JSON report, for round-trip checks.
struct ReportVerdicts {
  bool consistently_connected = false;
  std::vector<std::pair<std::string, Rational>> maximal_values;
  std::optional<bool> contextual;
  std::optional<bool> fine_feasible;
  std::optional<bool> octuple_feasible;

  bool operator==(const ReportVerdicts&) const = default;
};

ReportVerdicts verdicts_of(const Report& report);

/// Throws ParseError when `json` is not a well-formed report.
ReportVerdicts parse_report_verdicts(std::string_view json);

}  // namespace contextlab
