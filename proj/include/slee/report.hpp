#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "slee/verify.hpp"

namespace slee {

/// Wall-clock figures make output run-dependent, so they are opt-in.
struct ReportOptions {
  bool timing = false;
};

/// {theorem, n, d?, verdict, expected_g6, found_g6, slee_top, margin, runtime_ms, ...}.
/// margin is null for single-graph universes; runtime_ms is null unless timing is on.
nlohmann::json to_json(const TheoremReport& report, const ReportOptions& options = {});
nlohmann::json to_json(const ProofChain& chain);

std::string csv_header();
/// slee_top is packed as "g6=value" pairs separated by ';'.
std::string to_csv_row(const TheoremReport& report, const ReportOptions& options = {});

std::string to_text(const TheoremReport& report, const ReportOptions& options = {});
std::string to_text(const ProofChain& chain);

/// Shortest round-trip decimal form.
std::string format_double(double value);

}  // namespace slee
