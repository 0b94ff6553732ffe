#pragma once

#include <string>
#include <vector>

#include "twistlab/harness.hpp"

namespace twistlab::harness {

/// 15 significant digits, plain decimal or exponent form; deterministic.
std::string format_number(double v);

/// Stable key order, numbers rendered as decimal strings. runtime_ms is
/// deliberately excluded so identical (scenario, params, seed) runs are
/// byte-identical.
std::string to_json(const ScenarioResult& result);
std::string to_json(const std::vector<ScenarioResult>& results);

/// Header `scenario,cell,inputs,computed,expected,tolerance,pass`, one row
/// per cell.
std::string to_csv(const std::vector<ScenarioResult>& results);

enum class ReportFormat { Json, Csv };

void export_report(const std::vector<ScenarioResult>& results, ReportFormat format,
                   const std::string& path);

}  // namespace twistlab::harness
