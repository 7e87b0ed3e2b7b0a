#include "slee/semiwalk.hpp"

#include <string>

#include "slee/errors.hpp"

namespace slee {

WalkCountTable::WalkCountTable(int n, int max_length) : n_(n) {
  if (max_length < 0) throw ArgumentError("walk length bound must be nonnegative");
  powers_.assign(max_length + 1, std::vector<BigInt>(static_cast<std::size_t>(n) * n));
}

const BigInt& WalkCountTable::count(int k, Vertex x, Vertex y) const {
  if (k < 0 || k > max_length()) {
    throw ArgumentError("walk length " + std::to_string(k) + " outside table range 0.." + std::to_string(max_length()));
  }
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw ArgumentError("vertex out of range for walk table");
  return powers_[k][static_cast<std::size_t>(x) * n_ + y];
}

BigInt WalkCountTable::trace(int k) const {
  BigInt sum = 0;
  for (Vertex x = 0; x < n_; ++x) sum += count(k, x, x);
  return sum;
}

std::vector<BigInt> WalkCountTable::series(Vertex x, Vertex y) const {
  std::vector<BigInt> out;
  out.reserve(powers_.size());
  for (int k = 0; k <= max_length(); ++k) out.push_back(count(k, x, y));
  return out;
}

WalkCountTable walk_counts(const Graph& g, int max_length) {
  const int n = g.order();
  WalkCountTable table(n, max_length);
  auto& powers = table.powers_;
  for (Vertex x = 0; x < n; ++x) powers[0][static_cast<std::size_t>(x) * n + x] = 1;
  const auto degrees = g.degrees();
  // (M Q)_{xy} = M_{xy} d(y) + sum_{z ~ y} M_{xz}
  for (int k = 1; k <= max_length; ++k) {
    const auto& prev = powers[k - 1];
    auto& cur = powers[k];
    for (Vertex x = 0; x < n; ++x) {
      const std::size_t row = static_cast<std::size_t>(x) * n;
      for (Vertex y = 0; y < n; ++y) {
        BigInt value = prev[row + y] * degrees[y];
        for (Vertex z : g.neighbors(y)) value += prev[row + z];
        cur[row + y] = std::move(value);
      }
    }
  }
  return table;
}

namespace {

void check_enumeration_limits(const Graph& g, Vertex x, Vertex y, int k) {
  if (k < 0) throw ArgumentError("walk length must be nonnegative");
  if (k > kMaxEnumeratedLength) {
    throw LimitError("semi-edge walk enumeration is limited to length " + std::to_string(kMaxEnumeratedLength) +
                     ", requested " + std::to_string(k));
  }
  if (g.order() > kMaxEnumeratedOrder) {
    throw LimitError("semi-edge walk enumeration is limited to " + std::to_string(kMaxEnumeratedOrder) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
  g.neighbors(x);
  g.neighbors(y);
}

}  // namespace

void for_each_semi_edge_walk(const Graph& g, Vertex x, Vertex y, int k,
                             const std::function<void(const SemiEdgeWalk&)>& visit) {
  check_enumeration_limits(g, x, y, k);
  const auto dist_to_y = distances_from(g, y);
  SemiEdgeWalk walk;
  walk.vertices.push_back(x);
  std::function<void(int)> extend = [&](int remaining) {
    const Vertex cur = walk.vertices.back();
    if (remaining == 0) {
      if (cur == y) visit(walk);
      return;
    }
    for (Vertex w : g.neighbors(cur)) {
      const Edge e = make_edge(cur, w);
      for (Vertex next : {cur, w}) {  // stand still on e, or cross it
        if (dist_to_y[next] == kUnreachable || dist_to_y[next] > remaining - 1) continue;
        walk.edges.push_back(e);
        walk.vertices.push_back(next);
        extend(remaining - 1);
        walk.vertices.pop_back();
        walk.edges.pop_back();
      }
    }
  };
  if (dist_to_y[x] != kUnreachable && dist_to_y[x] <= k) extend(k);
}

std::vector<SemiEdgeWalk> enumerate_semi_edge_walks(const Graph& g, Vertex x, Vertex y, int k) {
  std::vector<SemiEdgeWalk> out;
  for_each_semi_edge_walk(g, x, y, k, [&](const SemiEdgeWalk& w) { out.push_back(w); });
  return out;
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictlyLess: return "strictly-less";
    case Dominance::LessOrEqual: return "less-or-equal-all-checked";
    case Dominance::Equal: return "equal-all-checked";
    case Dominance::StrictlyGreater: return "strictly-greater";
    case Dominance::Incomparable: return "incomparable";
  }
  return "unknown";
}

DominanceVerdict compare_series(std::span<const BigInt> lhs, std::span<const BigInt> rhs) {
  if (lhs.size() != rhs.size() || lhs.empty()) throw ArgumentError("compare_series: series lengths differ or are empty");
  std::optional<int> first_less;
  std::optional<int> first_greater;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] < rhs[k] && !first_less) first_less = static_cast<int>(k);
    if (lhs[k] > rhs[k] && !first_greater) first_greater = static_cast<int>(k);
  }
  DominanceVerdict verdict;
  verdict.checked_up_to = static_cast<int>(lhs.size()) - 1;
  if (first_less && first_greater) {
    verdict.relation = Dominance::Incomparable;
    verdict.witness_k = std::min(*first_less, *first_greater);
  } else if (first_less) {
    verdict.relation = Dominance::StrictlyLess;
    verdict.witness_k = first_less;
  } else if (first_greater) {
    verdict.relation = Dominance::StrictlyGreater;
    verdict.witness_k = first_greater;
  }
  return verdict;
}

DominanceVerdict compare_s(const WalkCountTable& table, Vertex x, Vertex y) {
  if (table.max_length() < 1) throw ArgumentError("compare_s needs K >= 1");
  const auto lhs = table.series(x, x);
  const auto rhs = table.series(y, y);
  return compare_series(lhs, rhs);
}

DominanceVerdict compare_s(const Graph& g, Vertex x, Vertex y, int max_length) {
  if (max_length < 1) throw ArgumentError("compare_s needs K >= 1");
  return compare_s(walk_counts(g, max_length), x, y);
}

DominanceVerdict compare_s_pair(const WalkCountTable& table, Vertex w, Vertex x, Vertex y) {
  if (table.max_length() < 1) throw ArgumentError("compare_s_pair needs K >= 1");
  const auto lhs = table.series(w, x);
  const auto rhs = table.series(w, y);
  return compare_series(lhs, rhs);
}

DominanceVerdict compare_s_pair(const Graph& g, Vertex w, Vertex x, Vertex y, int max_length) {
  if (max_length < 1) throw ArgumentError("compare_s_pair needs K >= 1");
  return compare_s_pair(walk_counts(g, max_length), w, x, y);
}

DominanceVerdict combine(std::span<const DominanceVerdict> verdicts) {
  DominanceVerdict out;
  if (verdicts.empty()) return out;
  out.checked_up_to = verdicts.front().checked_up_to;
  bool any_strict = false;
  bool any_equal = false;
  for (const auto& v : verdicts) {
    out.checked_up_to = std::min(out.checked_up_to, v.checked_up_to);
    if (!v.dominated()) return v;
    if (v.relation == Dominance::Equal) {
      any_equal = true;
    } else {
      any_strict = true;
      if (!out.witness_k || (v.witness_k && *v.witness_k < *out.witness_k)) out.witness_k = v.witness_k;
    }
  }
  if (!any_strict) {
    out.relation = Dominance::Equal;
  } else {
    out.relation = any_equal ? Dominance::LessOrEqual : Dominance::StrictlyLess;
  }
  if (out.relation == Dominance::Equal) out.witness_k.reset();
  return out;
}

}  // namespace slee
