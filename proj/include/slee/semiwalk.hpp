#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

using BigInt = boost::multiprecision::cpp_int;

/// Default bound K for the bounded s-order checks.
inline constexpr int kDefaultMaxLength = 20;

/// Explicit walk enumeration is exponential; these are its hard limits.
inline constexpr int kMaxEnumeratedLength = 8;
inline constexpr int kMaxEnumeratedOrder = 6;

/// Exact semi-edge walk counts: counts(k, x, y) = |SW_k(G; x, y)| = (Q^k)_{xy}.
class WalkCountTable {
 public:
  WalkCountTable(int n, int max_length);

  int order() const noexcept { return n_; }
  int max_length() const noexcept { return static_cast<int>(powers_.size()) - 1; }

  const BigInt& count(int k, Vertex x, Vertex y) const;
  const BigInt& closed(int k, Vertex x) const { return count(k, x, x); }
  /// T_k: number of closed semi-edge walks of length k.
  BigInt trace(int k) const;

  /// (count(k, x, y))_{k = 0..K}
  std::vector<BigInt> series(Vertex x, Vertex y) const;

 private:
  friend WalkCountTable walk_counts(const Graph& g, int max_length);

  int n_;
  std::vector<std::vector<BigInt>> powers_;  // row-major n*n per length
};

/// Q^0 .. Q^K in exact integer arithmetic.
WalkCountTable walk_counts(const Graph& g, int max_length);

/// v_1 e_1 v_2 ... e_k v_{k+1}; consecutive vertices are end-vertices of the
/// edge between them and may coincide (a stand-still step on that edge).
struct SemiEdgeWalk {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Visits every semi-edge walk of length k from x to y.
/// Throws LimitError beyond kMaxEnumeratedLength / kMaxEnumeratedOrder.
void for_each_semi_edge_walk(const Graph& g, Vertex x, Vertex y, int k,
                             const std::function<void(const SemiEdgeWalk&)>& visit);
std::vector<SemiEdgeWalk> enumerate_semi_edge_walks(const Graph& g, Vertex x, Vertex y, int k);

enum class Dominance {
  StrictlyLess,    // <= at every checked k, < at witness_k
  LessOrEqual,     // only produced by combine(): a mix of StrictlyLess and Equal
  Equal,           // equal at every checked k
  StrictlyGreater,
  Incomparable,
};

std::string_view to_string(Dominance d);

/// Outcome of a bounded s-order check; never claims anything beyond checked_up_to.
struct DominanceVerdict {
  Dominance relation = Dominance::Equal;
  std::optional<int> witness_k;
  int checked_up_to = 0;

  /// The "<=_s up to K" relation: StrictlyLess, LessOrEqual or Equal.
  bool dominated() const noexcept {
    return relation == Dominance::StrictlyLess || relation == Dominance::LessOrEqual || relation == Dominance::Equal;
  }
  bool strictly_dominated() const noexcept { return relation == Dominance::StrictlyLess; }
};

DominanceVerdict compare_series(std::span<const BigInt> lhs, std::span<const BigInt> rhs);

/// Closed walk counts at x against those at y, k = 0..K.
DominanceVerdict compare_s(const WalkCountTable& table, Vertex x, Vertex y);
DominanceVerdict compare_s(const Graph& g, Vertex x, Vertex y, int max_length = kDefaultMaxLength);

/// Walk counts w->x against w->y, k = 0..K.
DominanceVerdict compare_s_pair(const WalkCountTable& table, Vertex w, Vertex x, Vertex y);
DominanceVerdict compare_s_pair(const Graph& g, Vertex w, Vertex x, Vertex y, int max_length = kDefaultMaxLength);

/// Meet of several verdicts: Equal if all are equal, LessOrEqual/StrictlyLess
/// if all are dominated, otherwise the first non-dominated relation.
DominanceVerdict combine(std::span<const DominanceVerdict> verdicts);

}  // namespace slee
