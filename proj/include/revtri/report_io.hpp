#pragma once

#include "revtri/scenario.hpp"

#include <json.hpp>

#include <string>

namespace revtri {

using ReportJson = nlohmann::ordered_json;

ReportJson to_json(const HypothesisReport& report);
ReportJson to_json(const InequalityReport& report);
ReportJson to_json(const InequalityOutcome& outcome);
ReportJson to_json(const SearchResult& result, const SearchSpec& spec);
ReportJson run_report_json(const Scenario& scenario, const RunResult& result);
ReportJson sweep_report_json(const SweepResult& result);

/// Pretty JSON with every floating-point value written with 17 significant
/// digits, so parse + dump reproduces the same bytes.
std::string dump_report(const ReportJson& doc);

/// Column order: id, lhs, rhs, abs_gap, rel_gap, satisfied, equality_residual,
/// hypothesis_holds, worst_margin. Absent values are empty cells.
std::string run_report_csv(const RunResult& result);
/// Same columns preceded by the sweep value.
std::string sweep_report_csv(const SweepResult& result);

/// Human-readable summary used by the demo command.
std::string summary_text(const Scenario& scenario, const RunResult& result);

} // namespace revtri
