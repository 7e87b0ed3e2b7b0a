#include "slee/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace slee {

std::string format_double(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

nlohmann::json to_json(const TheoremReport& r, const ReportOptions& options) {
  nlohmann::json j;
  j["theorem"] = to_string(r.theorem);
  j["n"] = r.n;
  if (r.d) j["d"] = *r.d;
  j["verdict"] = to_string(r.verdict);
  j["expected_family"] = r.expected_family;
  j["expected_g6"] = r.expected_g6;
  j["found_g6"] = r.found_g6;
  j["expected_in_universe"] = r.expected_in_universe;
  j["universe_size"] = r.universe_size;
  auto top = nlohmann::json::array();
  for (const auto& row : r.slee_top) top.push_back({row.g6, row.slee});
  j["slee_top"] = std::move(top);
  j["margin"] = r.margin ? nlohmann::json(*r.margin) : nlohmann::json(nullptr);
  j["runtime_ms"] = options.timing ? nlohmann::json(r.runtime_ms) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const ProofChain& chain) {
  nlohmann::json j;
  j["chain"] = to_string(chain.kind);
  j["start_g6"] = chain.start_g6;
  j["end_g6"] = chain.end_g6;
  j["target"] = chain.target_family;
  j["reached_target"] = chain.reached_target;
  j["verified_monotone"] = chain.verified_monotone();
  auto steps = nlohmann::json::array();
  for (const auto& s : chain.steps) {
    steps.push_back({{"rule", s.rule},
                     {"source_g6", s.source_g6},
                     {"result_g6", s.result_g6},
                     {"from", s.from},
                     {"to", s.to},
                     {"moved", s.moved},
                     {"dominance", to_string(s.check.vertex_verdict.relation)},
                     {"witness_k", s.check.vertex_verdict.witness_k ? nlohmann::json(*s.check.vertex_verdict.witness_k)
                                                                    : nlohmann::json(nullptr)},
                     {"checked_up_to", s.check.vertex_verdict.checked_up_to},
                     {"slee_before", s.slee_before},
                     {"slee_after", s.slee_after},
                     {"verified", s.verified},
                     {"wrong_sign", s.wrong_sign}});
  }
  j["steps"] = std::move(steps);
  return j;
}

std::string csv_header() { return "theorem,n,d,verdict,expected_g6,found_g6,slee_top,margin,runtime_ms"; }

std::string to_csv_row(const TheoremReport& r, const ReportOptions& options) {
  std::ostringstream out;
  out << to_string(r.theorem) << ',' << r.n << ',' << (r.d ? std::to_string(*r.d) : "") << ','
      << to_string(r.verdict) << ',' << r.expected_g6 << ',' << r.found_g6 << ',';
  for (std::size_t i = 0; i < r.slee_top.size(); ++i) {
    if (i > 0) out << ';';
    out << r.slee_top[i].g6 << '=' << format_double(r.slee_top[i].slee);
  }
  out << ',' << (r.margin ? format_double(*r.margin) : "") << ',' << (options.timing ? format_double(r.runtime_ms) : "");
  return out.str();
}

std::string to_text(const TheoremReport& r, const ReportOptions& options) {
  std::ostringstream out;
  out << to_string(r.theorem) << " n=" << r.n;
  if (r.d) out << " d=" << *r.d;
  out << ": " << to_string(r.verdict);
  if (!r.expected_family.empty()) out << "  expected " << r.expected_family << " (" << r.expected_g6 << ")";
  if (!r.found_g6.empty()) out << "  found " << r.found_g6;
  out << '\n';
  if (r.verdict != Verdict::Vacuous) {
    out << "  universe " << r.universe_size << " graphs, margin "
        << (r.margin ? format_double(*r.margin) : std::string("n/a (single graph)")) << '\n';
  }
  for (const auto& row : r.slee_top) out << "    " << row.g6 << "  " << format_double(row.slee) << '\n';
  if (!r.note.empty()) out << "  note: " << r.note << '\n';
  if (options.timing) out << "  runtime " << format_double(r.runtime_ms) << " ms\n";
  return out.str();
}

std::string to_text(const ProofChain& chain) {
  std::ostringstream out;
  out << to_string(chain.kind) << "-chain " << chain.start_g6 << " -> " << chain.end_g6 << " ("
      << (chain.reached_target ? "reached " : "did not reach ") << chain.target_family << ", "
      << (chain.verified_monotone() ? "all steps verified" : "unverified steps") << ")\n";
  for (const auto& s : chain.steps) {
    out << "  " << s.rule << ": move {";
    for (std::size_t i = 0; i < s.moved.size(); ++i) out << (i ? "," : "") << s.moved[i];
    out << "} " << s.from << " -> " << s.to << "  SLEE " << format_double(s.slee_before) << " -> "
        << format_double(s.slee_after) << "  " << to_string(s.check.vertex_verdict.relation);
    if (s.check.vertex_verdict.witness_k) out << " (k=" << *s.check.vertex_verdict.witness_k << ")";
    out << (s.verified ? "" : "  [hypotheses not verified]") << (s.wrong_sign ? "  [WRONG SIGN]" : "") << '\n';
  }
  return out.str();
}

}  // namespace slee
