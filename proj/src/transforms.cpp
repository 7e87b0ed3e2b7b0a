#include "slee/transforms.hpp"

#include <algorithm>

#include "slee/errors.hpp"
#include "slee/spectral.hpp"

namespace slee {

TransferPlan transfer(const Graph& g, Vertex v, Vertex u, std::span<const Vertex> moved) {
  using Reason = TransferError::Reason;
  g.neighbors(v);
  g.neighbors(u);
  if (v == u) throw TransferError(Reason::SameVertex, v, "transfer: source and target are both " + std::to_string(v));
  std::vector<Vertex> w_sorted(moved.begin(), moved.end());
  std::sort(w_sorted.begin(), w_sorted.end());
  if (auto dup = std::adjacent_find(w_sorted.begin(), w_sorted.end()); dup != w_sorted.end()) {
    throw TransferError(Reason::Duplicate, *dup, "transfer: vertex " + std::to_string(*dup) + " listed twice");
  }
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex w : w_sorted) {
    g.neighbors(w);
    if (w == u) {
      throw TransferError(Reason::TargetInSet, w, "transfer: target " + std::to_string(u) + " is in the moved set");
    }
    if (!g.adjacent(v, w)) {
      throw TransferError(Reason::NotANeighbor, w,
                          "transfer: " + std::to_string(w) + " is not a neighbor of " + std::to_string(v));
    }
    if (g.adjacent(u, w)) {
      throw TransferError(Reason::CommonNeighbor, w,
                          "transfer: " + std::to_string(w) + " is already adjacent to " + std::to_string(u));
    }
    removed.push_back(make_edge(v, w));
    added.push_back(make_edge(u, w));
  }
  TransferPlan plan;
  plan.v = v;
  plan.u = u;
  plan.moved = std::move(w_sorted);
  plan.source = g;
  plan.route = g.edited({}, removed);
  plan.result = plan.route.edited(added, {});
  plan.result_connected = is_connected(plan.result);
  return plan;
}

TransferLemmaCheck check_transfer_lemma(const Graph& route, Vertex v, Vertex u, std::span<const Vertex> moved,
                                        int max_length) {
  route.neighbors(v);
  route.neighbors(u);
  if (v == u) throw ArgumentError("check_transfer_lemma: v and u coincide");
  std::vector<Edge> at_v;
  std::vector<Edge> at_u;
  for (Vertex w : moved) {
    route.neighbors(w);
    if (w == v || w == u || route.adjacent(w, v) || route.adjacent(w, u)) {
      throw ArgumentError("check_transfer_lemma: " + std::to_string(w) +
                          " must be a non-neighbor of both endpoints in the route");
    }
    at_v.push_back(make_edge(v, w));
    at_u.push_back(make_edge(u, w));
  }
  const auto table = walk_counts(route, max_length);
  TransferLemmaCheck check;
  check.vertex_verdict = compare_s(table, v, u);
  bool pairs_ok = true;
  for (Vertex w : moved) {
    check.pair_verdicts.push_back(compare_s_pair(table, w, v, u));
    pairs_ok = pairs_ok && check.pair_verdicts.back().dominated();
  }
  check.hypotheses_hold = check.vertex_verdict.strictly_dominated() && pairs_ok;
  check.slee_at_v = slee(route.edited(at_v, {}));
  check.slee_at_u = slee(route.edited(at_u, {}));
  check.delta = check.slee_at_u - check.slee_at_v;
  check.contradicted = check.hypotheses_hold && !(check.delta > kTransferTolerance);
  return check;
}

TransferLemmaCheck check_transfer_lemma(const TransferPlan& plan, int max_length) {
  return check_transfer_lemma(plan.route, plan.v, plan.u, plan.moved, max_length);
}

}  // namespace slee
