#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slee/canonical.hpp"
#include "slee/graph.hpp"
#include "slee/parallel.hpp"

namespace slee {

inline constexpr int kMinUnicyclicOrder = 3;
inline constexpr int kMaxUnicyclicOrder = 10;
inline constexpr int kMaxOracleOrder = 8;

/// One representative per isomorphism class, in ascending canonical-form order.
/// graphs[i] is forms[i].graph().
struct EnumerationResult {
  int n = 0;
  std::optional<int> diameter;
  std::vector<Graph> graphs;
  std::vector<CanonicalForm> forms;

  std::size_t count() const noexcept { return graphs.size(); }
  bool contains(const CanonicalForm& form) const;
};

/// Rooted tree in preorder: parent[0] == -1, parent[i] < i otherwise.
struct RootedTree {
  std::vector<int> parent;
};

/// All rooted trees on `size` vertices up to rooted isomorphism.
std::vector<RootedTree> rooted_trees(int size);

/// Unicyclic graphs on n vertices: every cycle length q, every assignment of
/// rooted trees to the cycle positions, deduplicated by canonical form.
/// Throws LimitError outside kMinUnicyclicOrder..kMaxUnicyclicOrder.
EnumerationResult enumerate_unicyclic(int n, const ParallelOptions& options = {});
/// Single-threaded reference for enumerate_unicyclic.
EnumerationResult enumerate_unicyclic_serial(int n);

/// Number of isomorphism classes among connected n-edge graphs on n labeled
/// vertices, by brute force over edge subsets. n <= kMaxOracleOrder.
std::size_t enumerate_unicyclic_labeled_oracle(int n);

EnumerationResult filter_by_diameter(const EnumerationResult& result, int d);

}  // namespace slee
