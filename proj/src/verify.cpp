#include "slee/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "slee/errors.hpp"
#include "slee/graph6.hpp"
#include "slee/spectral.hpp"

namespace slee {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Max: return "max";
    case TheoremId::SecondMax: return "second-max";
    case TheoremId::Min: return "min";
    case TheoremId::SecondMin: return "second-min";
    case TheoremId::DiameterMax: return "diameter-max";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Vacuous: return "vacuous";
  }
  return "unknown";
}

std::string_view to_string(ChainKind k) { return k == ChainKind::Max ? "max" : "min"; }

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

TheoremReport vacuous(TheoremId id, int n, std::optional<int> d, std::string note) {
  TheoremReport r;
  r.theorem = id;
  r.n = n;
  r.d = d;
  r.verdict = Verdict::Vacuous;
  r.note = std::move(note);
  return r;
}

// Ranks `pool` (indices into the universe) and compares the extremal member with `expected`.
TheoremReport judge(TheoremId id, const EnumerationResult& universe, const std::vector<double>& values,
                    std::vector<std::size_t> pool, bool maximize, const FamilySpec& expected) {
  TheoremReport r;
  r.theorem = id;
  r.n = universe.n;
  r.d = universe.diameter;
  r.universe_size = pool.size();
  if (pool.empty()) {
    r.verdict = Verdict::Vacuous;
    r.note = "empty universe";
    return r;
  }
  // Ties fall back to canonical order, which is the index order of the universe.
  std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
    return maximize ? values[a] > values[b] : values[a] < values[b];
  });
  const CanonicalForm expected_form = canonical_form(make_graph(expected));
  r.expected_family = format_family_spec(expected);
  r.expected_g6 = graph6_encode(expected_form.graph());
  r.expected_in_universe = universe.contains(expected_form);
  const std::size_t found = pool.front();
  r.found_g6 = graph6_encode(universe.graphs[found]);
  for (std::size_t i = 0; i < std::min<std::size_t>(5, pool.size()); ++i) {
    r.slee_top.push_back({graph6_encode(universe.graphs[pool[i]]), values[pool[i]]});
  }
  if (pool.size() >= 2) r.margin = std::abs(values[pool[0]] - values[pool[1]]);

  if (universe.forms[found] == expected_form) {
    r.verdict = (!r.margin || *r.margin > kStrictMargin) ? Verdict::Pass : Verdict::Inconclusive;
    if (r.verdict == Verdict::Inconclusive) r.note = "expected graph is extremal but the gap to the runner-up is within tolerance";
    return r;
  }
  auto it = std::find_if(pool.begin(), pool.end(), [&](std::size_t i) { return universe.forms[i] == expected_form; });
  if (it == pool.end()) {
    r.verdict = Verdict::Fail;
    r.note = "expected graph is not in the universe";
  } else if (std::abs(values[found] - values[*it]) <= kStrictMargin) {
    r.verdict = Verdict::Inconclusive;
    r.note = "another graph ties the expected one within tolerance";
  } else {
    r.verdict = Verdict::Fail;
    r.note = "a different graph is extremal";
  }
  return r;
}

std::vector<std::size_t> all_indices(const EnumerationResult& universe) {
  std::vector<std::size_t> pool(universe.count());
  std::iota(pool.begin(), pool.end(), 0);
  return pool;
}

// Pool minus the expected extremal graph (or, if it is missing, minus the found one).
std::vector<std::size_t> remainder(const EnumerationResult& universe, const TheoremReport& first,
                                   const FamilySpec& first_expected) {
  const CanonicalForm excluded_form = canonical_form(make_graph(first_expected));
  std::vector<std::size_t> pool;
  bool removed = false;
  for (std::size_t i = 0; i < universe.count(); ++i) {
    if (universe.forms[i] == excluded_form) {
      removed = true;
      continue;
    }
    pool.push_back(i);
  }
  if (!removed && !first.found_g6.empty()) {
    std::erase_if(pool, [&](std::size_t i) { return graph6_encode(universe.graphs[i]) == first.found_g6; });
  }
  return pool;
}

void check_theorem_order(int n) {
  if (n < kMinUnicyclicOrder || n > kMaxUnicyclicOrder) {
    throw LimitError("theorem checks support n in " + std::to_string(kMinUnicyclicOrder) + ".." +
                     std::to_string(kMaxUnicyclicOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::pair<TheoremReport, TheoremReport> verify_max(const EnumerationResult& universe, const ParallelOptions& options) {
  const int n = universe.n;
  if (n < 4) {
    return {vacuous(TheoremId::Max, n, std::nullopt, "G^(1) needs n >= 4; C_3 is the only unicyclic graph"),
            vacuous(TheoremId::SecondMax, n, std::nullopt, "G^(2) needs n >= 5")};
  }
  const auto values = slee_batch(universe.graphs, options);
  const FamilySpec g1{FamilyKind::G1, {n}};
  TheoremReport first = judge(TheoremId::Max, universe, values, all_indices(universe), true, g1);
  if (n < 5) {
    return {first, vacuous(TheoremId::SecondMax, n, std::nullopt, "G^(2) needs n >= 5; skipped")};
  }
  TheoremReport second =
      judge(TheoremId::SecondMax, universe, values, remainder(universe, first, g1), true, {FamilyKind::G2, {n}});
  return {first, second};
}

std::pair<TheoremReport, TheoremReport> verify_min(const EnumerationResult& universe, const ParallelOptions& options) {
  const int n = universe.n;
  if (n < 4) {
    return {vacuous(TheoremId::Min, n, std::nullopt, "no unicyclic graph with a cycle shorter than n; only C_3 exists"),
            vacuous(TheoremId::SecondMin, n, std::nullopt, "G_(2) needs n >= 4")};
  }
  const auto values = slee_batch(universe.graphs, options);
  const FamilySpec cycle{FamilyKind::Cycle, {n}};
  TheoremReport first = judge(TheoremId::Min, universe, values, all_indices(universe), false, cycle);
  TheoremReport second = judge(TheoremId::SecondMin, universe, values, remainder(universe, first, cycle), false,
                               {FamilyKind::Gmin2, {n}});
  return {first, second};
}

TheoremReport verify_diameter_max(const EnumerationResult& universe, int d, const ParallelOptions& options) {
  const int n = universe.n;
  if (d < 2 || d > n - 2) {
    throw ArgumentError("diameter check needs 2 <= d <= n-2, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
  }
  const EnumerationResult cls = filter_by_diameter(universe, d);
  if (cls.count() == 0) return vacuous(TheoremId::DiameterMax, n, d, "empty universe: no unicyclic graph has this diameter");
  const auto values = slee_batch(cls.graphs, options);
  return judge(TheoremId::DiameterMax, cls, values, all_indices(cls), true, {FamilyKind::Gd, {n, d}});
}

std::pair<TheoremReport, TheoremReport> verify_max(int n, const ParallelOptions& options) {
  check_theorem_order(n);
  const auto start = Clock::now();
  auto reports = verify_max(enumerate_unicyclic(n, options), options);
  reports.first.n = reports.second.n = n;
  reports.first.runtime_ms = reports.second.runtime_ms = elapsed_ms(start);
  return reports;
}

std::pair<TheoremReport, TheoremReport> verify_min(int n, const ParallelOptions& options) {
  check_theorem_order(n);
  const auto start = Clock::now();
  auto reports = verify_min(enumerate_unicyclic(n, options), options);
  reports.first.n = reports.second.n = n;
  reports.first.runtime_ms = reports.second.runtime_ms = elapsed_ms(start);
  return reports;
}

TheoremReport verify_diameter_max(int n, int d, const ParallelOptions& options) {
  check_theorem_order(n);
  const auto start = Clock::now();
  auto report = verify_diameter_max(enumerate_unicyclic(n, options), d, options);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------
// Proof-step replay

bool ProofChain::verified_monotone() const {
  return reached_target && std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) {
           return s.verified && !s.wrong_sign;
         });
}

namespace {

Graph apply_step(ProofChain& chain, const Graph& g, std::string rule, Vertex from, Vertex to,
                 std::vector<Vertex> moved, int max_length) {
  const TransferPlan plan = transfer(g, from, to, moved);
  ProofStep step;
  step.rule = std::move(rule);
  step.source_g6 = graph6_encode(g);
  step.result_g6 = graph6_encode(plan.result);
  step.from = from;
  step.to = to;
  step.moved = plan.moved;
  if (chain.kind == ChainKind::Max) {
    // Moving from the dominated vertex to the dominating one.
    step.check = check_transfer_lemma(plan.route, from, to, plan.moved, max_length);
    step.slee_before = step.check.slee_at_v;
    step.slee_after = step.check.slee_at_u;
  } else {
    step.check = check_transfer_lemma(plan.route, to, from, plan.moved, max_length);
    step.slee_before = step.check.slee_at_u;
    step.slee_after = step.check.slee_at_v;
  }
  step.verified = step.check.hypotheses_hold;
  const double gain = chain.kind == ChainKind::Max ? step.slee_after - step.slee_before
                                                   : step.slee_before - step.slee_after;
  step.wrong_sign = step.verified && !(gain > kTransferTolerance);
  chain.steps.push_back(std::move(step));
  return plan.result;
}

std::vector<Vertex> tree_vertices(const HangingForest& f, Vertex root) {
  std::vector<Vertex> out{root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex c : f.children[out[i]]) out.push_back(c);
  }
  return out;
}

int step_budget(const Graph& g) { return 4 * g.order() * g.order() + 8; }

ProofChain start_chain(ChainKind kind, const Graph& g, std::string target) {
  if (!is_unicyclic(g)) throw ArgumentError("proof replay needs a unicyclic graph");
  ProofChain chain;
  chain.kind = kind;
  chain.start_g6 = graph6_encode(g);
  chain.target_family = std::move(target);
  return chain;
}

}  // namespace

ProofChain replay_max_chain(const Graph& start, int max_length) {
  const int n = start.order();
  const FamilySpec target = n >= 4 ? FamilySpec{FamilyKind::G1, {n}} : FamilySpec{FamilyKind::Cycle, {n}};
  ProofChain chain = start_chain(ChainKind::Max, start, format_family_spec(target));
  Graph g = start;
  for (int budget = step_budget(start); budget > 0; --budget) {
    const HangingForest f = hanging_forest(g);
    const int q = static_cast<int>(f.cycle.size());

    // Pull the grandchildren of a cycle vertex up onto it.
    bool moved = false;
    for (Vertex c : f.cycle) {
      for (Vertex v : f.children[c]) {
        if (!f.children[v].empty()) {
          g = apply_step(chain, g, "star-collapse", v, c, f.children[v], max_length);
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (moved) continue;

    if (q > 3) {
      // Contract the cycle edge after the vertex with most pendants.
      int best = 0;
      for (int i = 1; i < q; ++i) {
        if (f.children[f.cycle[i]].size() > f.children[f.cycle[best]].size()) best = i;
      }
      const Vertex v = f.cycle[best];
      const Vertex u = f.cycle[(best + 1) % q];
      std::vector<Vertex> w;
      for (Vertex x : g.neighbors(v)) {
        if (x != u) w.push_back(x);
      }
      g = apply_step(chain, g, "cycle-shrink", v, u, w, max_length);
      continue;
    }

    // Triangle with pendants only: consolidate them on the heaviest cycle vertex.
    std::vector<Vertex> by_load = f.cycle;
    std::stable_sort(by_load.begin(), by_load.end(),
                     [&](Vertex a, Vertex b) { return f.children[a].size() > f.children[b].size(); });
    const Vertex heavy = by_load[0];
    const Vertex middle = by_load[1];
    const Vertex light = by_load[2];
    if (!f.children[light].empty()) {
      g = apply_step(chain, g, "pendant-consolidation", light, heavy, f.children[light], max_length);
    } else if (f.children[middle].size() > 1) {
      std::vector<Vertex> w(f.children[middle].begin(), f.children[middle].end() - 1);
      g = apply_step(chain, g, "pendant-consolidation", middle, heavy, w, max_length);
    } else if (f.children[middle].size() == 1) {
      g = apply_step(chain, g, "pendant-consolidation", middle, heavy, f.children[middle], max_length);
    } else {
      break;
    }
  }
  chain.end_g6 = graph6_encode(g);
  chain.reached_target = isomorphic(g, make_graph(target));
  return chain;
}

ProofChain replay_min_chain(const Graph& start, int max_length) {
  const int n = start.order();
  ProofChain chain = start_chain(ChainKind::Min, start, format_family_spec({FamilyKind::Cycle, {n}}));
  Graph g = start;
  for (int budget = step_budget(start); budget > 0; --budget) {
    const HangingForest f = hanging_forest(g);
    const int q = static_cast<int>(f.cycle.size());
    if (q == n) break;

    // Straighten the first hanging tree that is not a path.
    bool moved = false;
    for (Vertex c : f.cycle) {
      const auto members = tree_vertices(f, c);
      const bool is_path = std::all_of(members.begin(), members.end(), [&](Vertex x) { return f.children[x].size() <= 1; });
      if (is_path) continue;
      Vertex deepest = c;
      for (Vertex x : members) {
        if (f.depth[x] > f.depth[deepest] || (f.depth[x] == f.depth[deepest] && x < deepest)) deepest = x;
      }
      std::vector<Vertex> path{deepest};  // path[0] is a leaf, path.back() == c
      while (path.back() != c) path.push_back(f.parent[path.back()]);
      const int r = static_cast<int>(path.size()) - 1;
      for (int j = 1; j <= r; ++j) {
        if (f.children[path[j]].size() <= 1) continue;
        std::vector<Vertex> w;
        for (Vertex x : f.children[path[j]]) {
          if (x != path[j - 1]) w.push_back(x);
        }
        g = apply_step(chain, g, "path-straighten", path[j], path[0], w, max_length);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (moved) continue;

    // Every tree is a path: fold the first one into the cycle.
    for (int i = 0; i < q; ++i) {
      const Vertex c = f.cycle[i];
      if (f.children[c].empty()) continue;
      std::vector<Vertex> hanging;
      for (Vertex x = f.children[c][0];; x = f.children[x][0]) {
        hanging.push_back(x);
        if (f.children[x].empty()) break;
      }
      const Vertex predecessor = f.cycle[(i + q - 1) % q];
      const Vertex target = hanging.size() >= 2 ? hanging[hanging.size() - 2] : hanging[0];
      g = apply_step(chain, g, "path-absorb", c, target, {predecessor}, max_length);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  chain.end_g6 = graph6_encode(g);
  chain.reached_target = isomorphic(g, make_cycle(n));
  return chain;
}

std::vector<ProofChain> replay_proof_steps(int n, const ParallelOptions& options, int max_length) {
  if (n < kMinUnicyclicOrder || n > kMaxReplayOrder) {
    throw LimitError("proof replay supports n in " + std::to_string(kMinUnicyclicOrder) + ".." +
                     std::to_string(kMaxReplayOrder) + ", got " + std::to_string(n));
  }
  const auto universe = enumerate_unicyclic(n, options);
  const CanonicalForm max_target = canonical_form(n >= 4 ? make_g1(n) : make_cycle(n));
  const CanonicalForm min_target = canonical_form(make_cycle(n));
  struct Job {
    std::size_t index;
    ChainKind kind;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < universe.count(); ++i) {
    if (universe.forms[i] != max_target) jobs.push_back({i, ChainKind::Max});
  }
  for (std::size_t i = 0; i < universe.count(); ++i) {
    if (universe.forms[i] != min_target) jobs.push_back({i, ChainKind::Min});
  }
  std::vector<ProofChain> chains(jobs.size());
  parallel_for_index(jobs.size(), options, [&](std::size_t j) {
    const Graph& g = universe.graphs[jobs[j].index];
    chains[j] = jobs[j].kind == ChainKind::Max ? replay_max_chain(g, max_length) : replay_min_chain(g, max_length);
  });
  return chains;
}

}  // namespace slee
