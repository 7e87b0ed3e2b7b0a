#pragma once

#include <span>
#include <string>
#include <vector>

#include "slee/graph.hpp"
#include "slee/semiwalk.hpp"

namespace slee {

/// Moving the edges v-w (w in W) over to u-w.
struct TransferPlan {
  Vertex v = 0;
  Vertex u = 0;
  std::vector<Vertex> moved;  // transferred neighbors w_1..w_r, ascending
  Graph source;               // route + {v w}
  Graph route;                // source minus the edges v w
  Graph result;               // route + {u w}
  bool result_connected = false;
};

class TransferError : public std::invalid_argument {
 public:
  enum class Reason { SameVertex, TargetInSet, NotANeighbor, CommonNeighbor, Duplicate };

  TransferError(Reason reason, Vertex w, const std::string& what)
      : std::invalid_argument(what), reason_(reason), vertex_(w) {}

  Reason reason() const noexcept { return reason_; }
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Reason reason_;
  Vertex vertex_;
};

/// Preconditions: W subset of N(v) \ {u}, no w in W adjacent to u. Each
/// violation throws TransferError naming it. Vertex range errors throw ArgumentError.
TransferPlan transfer(const Graph& g, Vertex v, Vertex u, std::span<const Vertex> moved);

/// Numerical check of the transfer lemma on a route graph: if
/// (route; v) <_s (route; u) and (route; w, v) <=_s (route; w, u) for every
/// transferred w, then SLEE(route + vW) < SLEE(route + uW). Bounded by K.
struct TransferLemmaCheck {
  DominanceVerdict vertex_verdict;              // (route; v) vs (route; u)
  std::vector<DominanceVerdict> pair_verdicts;  // one per w, (route; w, v) vs (route; w, u)
  bool hypotheses_hold = false;
  double slee_at_v = 0.0;  // SLEE(route + {v w})
  double slee_at_u = 0.0;  // SLEE(route + {u w})
  double delta = 0.0;      // slee_at_u - slee_at_v
  /// Hypotheses verified but delta <= tolerance: a counterexample to the lemma.
  bool contradicted = false;
};

/// Gaps at or below this are not counted as strict increases.
inline constexpr double kTransferTolerance = 1e-9;

/// W must avoid v, u and their route neighborhoods.
TransferLemmaCheck check_transfer_lemma(const Graph& route, Vertex v, Vertex u, std::span<const Vertex> moved,
                                        int max_length = kDefaultMaxLength);
/// Same check for a plan; plan.v plays the dominated role.
TransferLemmaCheck check_transfer_lemma(const TransferPlan& plan, int max_length = kDefaultMaxLength);

}  // namespace slee
