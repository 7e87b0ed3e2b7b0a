#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

/// Largest order canonical_form() accepts.
inline constexpr int kMaxCanonicalOrder = 20;

/// Relabeling-invariant representative of a graph's isomorphism class.
///
/// The representative is the relabeled copy of the graph whose adjacency rows
/// are lexicographically smallest among the leaves of an
/// individualization-refinement search tree. The tree itself depends only on
/// the isomorphism class, so equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;  // sorted, under the canonical labeling

  Graph graph() const { return Graph(n, edges); }
  /// n followed by the (u, v) pairs, one byte each.
  std::vector<std::uint8_t> bytes() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<Vertex> labels;  // original vertex v becomes labels[v]
  CanonicalForm form;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Shorthand for canonical_form(a) == canonical_form(b).
bool isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace slee
