#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "slee/canonical.hpp"
#include "slee/enumeration.hpp"
#include "slee/errors.hpp"
#include "slee/families.hpp"
#include "slee/graph6.hpp"
#include "slee/report.hpp"
#include "slee/semiwalk.hpp"
#include "slee/spectral.hpp"
#include "slee/transforms.hpp"
#include "slee/verify.hpp"

namespace slee::cli {
namespace {

struct InputOptions {
  std::string path;
  std::string family;
};

struct LoadedGraph {
  Graph graph;
  std::optional<FamilyInstance> family;
  std::string family_text;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--input", in.path, "graph6 file, one graph per line");
  auto* fam = cmd->add_option("--family", in.family, "family spec, e.g. G1:7, C3S:2,0,0, Gd:7,3");
  file->excludes(fam);
}

std::vector<LoadedGraph> load(const InputOptions& in) {
  if (in.path.empty() && in.family.empty()) throw ArgumentError("one of --input or --family is required");
  std::vector<LoadedGraph> out;
  if (!in.family.empty()) {
    auto instance = make_family(parse_family_spec(in.family));
    out.push_back({instance.graph, instance, in.family});
    return out;
  }
  for (auto& g : read_graph6_file(in.path)) out.push_back({std::move(g), std::nullopt, {}});
  if (out.empty()) throw std::runtime_error(in.path + ": no graphs");
  return out;
}

LoadedGraph load_one(const InputOptions& in) {
  auto graphs = load(in);
  if (graphs.size() != 1) throw ArgumentError("this command takes exactly one graph; the input has " +
                                              std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string fixed(double value, int digits = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

ParallelOptions parallel_options(int threads) {
  ParallelOptions p;
  p.threads = threads;
  return p;
}

// ---------------------------------------------------------------------------

int cmd_compute(const InputOptions& in, int moments, bool json, std::ostream& out) {
  const auto graphs = load(in);
  auto docs = nlohmann::json::array();
  for (const auto& item : graphs) {
    const auto summary = summarize(item.graph, moments);
    const Graph& g = item.graph;
    if (json) {
      nlohmann::json j;
      j["g6"] = graph6_encode(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["eigenvalues"] = summary.eigenvalues;
      j["slee"] = summary.slee;
      j["moments"] = summary.moments;
      if (item.family) {
        j["family"] = item.family_text;
        nlohmann::json roles = nlohmann::json::object();
        for (const auto& [name, v] : item.family->roles) roles[name] = v;
        j["roles"] = std::move(roles);
      }
      docs.push_back(std::move(j));
      continue;
    }
    out << "graph6: " << graph6_encode(g) << '\n';
    if (item.family) {
      out << "family: " << item.family_text << '\n' << "roles:";
      for (const auto& [name, v] : item.family->roles) out << ' ' << name << '=' << v;
      out << '\n';
    }
    out << "n: " << g.order() << "\nm: " << g.size() << "\neigenvalues:";
    for (double q : summary.eigenvalues) out << ' ' << fixed(q);
    out << "\nslee: " << fixed(summary.slee) << '\n';
    for (std::size_t k = 0; k < summary.moments.size(); ++k) out << "T_" << k << ": " << fixed(summary.moments[k], 6) << '\n';
  }
  if (json) out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kOk;
}

int cmd_enumerate(int n, std::optional<int> diameter_filter, const std::string& out_path, int threads,
                  std::ostream& out, std::ostream& err) {
  auto result = enumerate_unicyclic(n, parallel_options(threads));
  if (diameter_filter) result = filter_by_diameter(result, *diameter_filter);
  if (!out_path.empty()) {
    write_graph6_file(out_path, result.graphs);
  } else {
    for (const auto& g : result.graphs) out << graph6_encode(g) << '\n';
  }
  err << result.count() << " unicyclic graphs on " << n << " vertices";
  if (diameter_filter) err << " with diameter " << *diameter_filter;
  err << '\n';
  return kOk;
}

int cmd_verify(const std::string& theorem, int n, std::optional<int> d, bool json, bool csv, bool timing, int threads,
               std::ostream& out) {
  const auto options = parallel_options(threads);
  std::vector<TheoremReport> reports;
  if (theorem == "max") {
    auto [a, b] = verify_max(n, options);
    reports = {a, b};
  } else if (theorem == "min") {
    auto [a, b] = verify_min(n, options);
    reports = {a, b};
  } else {
    if (n < kMinUnicyclicOrder || n > kMaxUnicyclicOrder) {
      throw LimitError("theorem checks support n in 3..10, got " + std::to_string(n));
    }
    if (d) {
      reports.push_back(verify_diameter_max(n, *d, options));
    } else {
      const auto universe = enumerate_unicyclic(n, options);
      for (int dd = 2; dd <= n - 2; ++dd) reports.push_back(verify_diameter_max(universe, dd, options));
      if (reports.empty()) {
        TheoremReport r;
        r.theorem = TheoremId::DiameterMax;
        r.n = n;
        r.note = "no diameter in 2..n-2";
        reports.push_back(r);
      }
    }
  }
  const ReportOptions report_options{timing};
  if (json) {
    auto rows = nlohmann::json::array();
    for (const auto& r : reports) rows.push_back(to_json(r, report_options));
    out << rows.dump(2) << '\n';
  } else if (csv) {
    out << csv_header() << '\n';
    for (const auto& r : reports) out << to_csv_row(r, report_options) << '\n';
  } else {
    for (const auto& r : reports) out << to_text(r, report_options);
  }
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return kFailed;
    inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
  }
  return inconclusive ? kInconclusive : kOk;
}

int cmd_walks(const InputOptions& in, std::optional<int> from, std::optional<int> to, int max_k, bool json,
              std::ostream& out) {
  if (from.has_value() != to.has_value()) throw ArgumentError("--from and --to must be given together");
  const auto item = load_one(in);
  const auto table = walk_counts(item.graph, max_k);
  std::vector<std::string> counts;
  for (int k = 0; k <= max_k; ++k) {
    counts.push_back(from ? table.count(k, *from, *to).str() : table.trace(k).str());
  }
  if (json) {
    nlohmann::json j;
    if (from) {
      j["from"] = *from;
      j["to"] = *to;
    } else {
      j["closed_total"] = true;
    }
    j["max_k"] = max_k;
    j["counts"] = counts;
    out << j.dump(2) << '\n';
  } else {
    out << join(counts, ", ") << '\n';
  }
  return kOk;
}

int cmd_compare_s(const InputOptions& in, int x, int y, std::optional<int> w, int max_k, bool json, std::ostream& out) {
  const auto item = load_one(in);
  const auto verdict = w ? compare_s_pair(item.graph, *w, x, y, max_k) : compare_s(item.graph, x, y, max_k);
  if (json) {
    nlohmann::json j;
    j["x"] = x;
    j["y"] = y;
    if (w) j["w"] = *w;
    j["relation"] = to_string(verdict.relation);
    j["witness_k"] = verdict.witness_k ? nlohmann::json(*verdict.witness_k) : nlohmann::json(nullptr);
    j["checked_up_to"] = verdict.checked_up_to;
    out << j.dump(2) << '\n';
  } else {
    out << to_string(verdict.relation);
    if (verdict.witness_k) out << " witness k=" << *verdict.witness_k;
    out << " (checked k <= " << verdict.checked_up_to << ")\n";
  }
  return kOk;
}

int cmd_transfer(const InputOptions& in, int v, int u, const std::vector<int>& neighbors, int max_k, bool json,
                 std::ostream& out) {
  const auto item = load_one(in);
  const auto plan = transfer(item.graph, v, u, neighbors);
  const auto check = check_transfer_lemma(plan, max_k);
  if (json) {
    nlohmann::json j;
    j["source_g6"] = graph6_encode(plan.source);
    j["route_g6"] = graph6_encode(plan.route);
    j["result_g6"] = graph6_encode(plan.result);
    j["result_connected"] = plan.result_connected;
    j["moved"] = plan.moved;
    j["slee_before"] = check.slee_at_v;
    j["slee_after"] = check.slee_at_u;
    j["delta"] = check.delta;
    j["relation"] = to_string(check.vertex_verdict.relation);
    j["witness_k"] = check.vertex_verdict.witness_k ? nlohmann::json(*check.vertex_verdict.witness_k)
                                                    : nlohmann::json(nullptr);
    auto pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < plan.moved.size(); ++i) {
      pairs.push_back({{"w", plan.moved[i]}, {"relation", to_string(check.pair_verdicts[i].relation)}});
    }
    j["pairs"] = std::move(pairs);
    j["checked_up_to"] = max_k;
    j["hypotheses_hold"] = check.hypotheses_hold;
    j["contradicted"] = check.contradicted;
    out << j.dump(2) << '\n';
  } else {
    out << "result: " << graph6_encode(plan.result) << (plan.result_connected ? "" : " (disconnected)") << '\n'
        << "slee before: " << fixed(check.slee_at_v) << '\n'
        << "slee after:  " << fixed(check.slee_at_u) << '\n'
        << "route (" << v << " vs " << u << "): " << to_string(check.vertex_verdict.relation);
    if (check.vertex_verdict.witness_k) out << " witness k=" << *check.vertex_verdict.witness_k;
    out << '\n';
    for (std::size_t i = 0; i < plan.moved.size(); ++i) {
      out << "  pair w=" << plan.moved[i] << ": " << to_string(check.pair_verdicts[i].relation) << '\n';
    }
    out << "hypotheses " << (check.hypotheses_hold ? "hold" : "do not hold") << " for k <= " << max_k;
    if (check.hypotheses_hold) out << (check.contradicted ? "; SLEE did NOT increase" : "; SLEE increases");
    out << '\n';
  }
  return check.contradicted ? kFailed : kOk;
}

int cmd_replay(const InputOptions& in, std::optional<int> n, const std::string& which, int max_k, int threads,
               bool json, std::ostream& out) {
  std::vector<ProofChain> chains;
  if (n) {
    if (!in.path.empty() || !in.family.empty()) throw ArgumentError("-n cannot be combined with --input/--family");
    for (auto& c : replay_proof_steps(*n, parallel_options(threads), max_k)) {
      if (which == "both" || which == to_string(c.kind)) chains.push_back(std::move(c));
    }
  } else {
    for (const auto& item : load(in)) {
      if (which != "min") chains.push_back(replay_max_chain(item.graph, max_k));
      if (which != "max") chains.push_back(replay_min_chain(item.graph, max_k));
    }
  }
  bool unverified = false;
  bool broken = false;
  for (const auto& c : chains) {
    for (const auto& s : c.steps) {
      unverified = unverified || !s.verified;
      broken = broken || s.wrong_sign;
    }
    broken = broken || !c.reached_target;
  }
  if (json) {
    auto docs = nlohmann::json::array();
    for (const auto& c : chains) docs.push_back(to_json(c));
    out << docs.dump(2) << '\n';
  } else {
    for (const auto& c : chains) out << to_text(c);
    out << chains.size() << " chains\n";
  }
  if (broken) return kFailed;
  return unverified ? kInconclusive : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signless Laplacian Estrada index of unicyclic graphs"};
  app.require_subcommand(1);

  InputOptions in;
  int moments = 6;
  bool json = false;
  bool csv = false;
  bool timing = false;
  int n = 0;
  std::optional<int> d;
  std::optional<int> from;
  std::optional<int> to;
  std::optional<int> w;
  std::optional<int> replay_n;
  int x = 0;
  int y = 0;
  int v = 0;
  int u = 0;
  int max_k = kDefaultMaxLength;
  int threads = 0;
  std::vector<int> neighbors;
  std::string out_path;
  std::string theorem;
  std::string which = "both";

  auto* compute = app.add_subcommand("compute", "spectrum, SLEE and moments of a graph");
  add_input_options(compute, in);
  compute->add_option("--moments", moments, "largest moment order to print")->check(CLI::Range(0, 200));
  compute->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "all unicyclic graphs on n vertices as graph6");
  enumerate->add_option("-n", n, "vertex count")->required();
  enumerate->add_option("--diameter", d, "keep only this diameter");
  enumerate->add_option("--out", out_path, "write graph6 lines here instead of stdout");
  enumerate->add_option("--threads", threads);

  auto* verify = app.add_subcommand("verify", "check an extremal claim over all unicyclic graphs");
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"max", "min", "diameter"}));
  verify->add_option("-n", n)->required();
  verify->add_option("-d", d, "diameter (all diameters when omitted)");
  auto* json_flag = verify->add_flag("--json", json);
  verify->add_flag("--csv", csv)->excludes(json_flag);
  verify->add_flag("--timing", timing, "include wall-clock runtime");
  verify->add_option("--threads", threads);

  auto* walks = app.add_subcommand("walks", "exact semi-edge walk counts");
  add_input_options(walks, in);
  walks->add_option("--from", from);
  walks->add_option("--to", to);
  walks->add_option("--max-k", max_k)->check(CLI::Range(0, 500));
  walks->add_flag("--json", json);

  auto* compare = app.add_subcommand("compare-s", "bounded s-order comparison of two vertices");
  add_input_options(compare, in);
  compare->add_option("-x", x)->required();
  compare->add_option("-y", y)->required();
  compare->add_option("-w", w, "compare walks w->x against w->y instead of closed walks");
  compare->add_option("--max-k", max_k)->check(CLI::Range(1, 500));
  compare->add_flag("--json", json);

  auto* move = app.add_subcommand("transfer", "move neighbors of v over to u and check the transfer lemma");
  add_input_options(move, in);
  move->add_option("--v", v)->required();
  move->add_option("--u", u)->required();
  move->add_option("--neighbors", neighbors)->delimiter(',');
  move->add_option("--max-k", max_k)->check(CLI::Range(1, 500));
  move->add_flag("--json", json);

  auto* replay = app.add_subcommand("replay", "replay the extremal reduction chains");
  add_input_options(replay, in);
  replay->add_option("-n", replay_n, "all non-extremal unicyclic graphs on n vertices");
  replay->add_option("--chain", which)->check(CLI::IsMember({"max", "min", "both"}));
  replay->add_option("--max-k", max_k)->check(CLI::Range(1, 500));
  replay->add_option("--threads", threads);
  replay->add_flag("--json", json);

  std::ostringstream buffered_out;
  std::ostringstream buffered_err;
  int code = kOk;
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (compute->parsed()) {
      code = cmd_compute(in, moments, json, buffered_out);
    } else if (enumerate->parsed()) {
      code = cmd_enumerate(n, d, out_path, threads, buffered_out, buffered_err);
    } else if (verify->parsed()) {
      code = cmd_verify(theorem, n, d, json, csv, timing, threads, buffered_out);
    } else if (walks->parsed()) {
      code = cmd_walks(in, from, to, max_k, json, buffered_out);
    } else if (compare->parsed()) {
      code = cmd_compare_s(in, x, y, w, max_k, json, buffered_out);
    } else if (move->parsed()) {
      code = cmd_transfer(in, v, u, neighbors, max_k, json, buffered_out);
    } else if (replay->parsed()) {
      code = cmd_replay(in, replay_n, which, max_k, threads, json, buffered_out);
    }
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, buffered_out, buffered_err);
    code = status == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    buffered_err << "error: " << e.what() << '\n';
    code = kInputError;
  } catch (const LimitError& e) {
    buffered_err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::invalid_argument& e) {  // ArgumentError, TransferError
    buffered_err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const ContractError& e) {
    buffered_err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::exception& e) {
    buffered_err << "error: " << e.what() << '\n';
    code = kInputError;
  }
  out << buffered_out.str();
  err << buffered_err.str();
  out.flush();
  return code;
}

}  // namespace slee::cli
