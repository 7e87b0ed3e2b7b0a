#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace slee {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Graphs are stored with one 64-bit adjacency row per vertex.
inline constexpr int kMaxOrder = 64;

/// Returned by distance() for vertices in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Edges may be given in any orientation and order; loops, duplicates and
  /// out-of-range endpoints throw ArgumentError.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::uint64_t neighbor_mask(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const noexcept;
  std::vector<int> degrees() const;

  /// N^np(v): neighbors of v with degree at least 2.
  std::vector<Vertex> non_pendent_neighbors(Vertex v) const;

  /// New graph with `remove` deleted and then `add` inserted.
  Graph edited(std::span<const Edge> add, std::span<const Edge> remove) const;
  /// Same graph plus `k` isolated vertices n..n+k-1.
  Graph with_isolated_vertices(int k) const;
  /// Vertex v becomes perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
};

Edge make_edge(Vertex a, Vertex b);

bool is_connected(const Graph& g);
/// Connected with |E| = n.
bool is_unicyclic(const Graph& g);

/// Vertices of the unique cycle in traversal order, starting at the smallest
/// label and heading toward its smaller-labeled cycle neighbor.
/// Throws ContractError unless is_unicyclic(g).
std::vector<Vertex> unique_cycle(const Graph& g);

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> distances_from(const Graph& g, Vertex source);
int distance(const Graph& g, Vertex u, Vertex v);
/// Throws ContractError on disconnected input. The empty graph has diameter 0.
int diameter(const Graph& g);

/// Unicyclic graph seen as a cycle with a rooted tree hanging from each cycle vertex.
struct HangingForest {
  std::vector<Vertex> cycle;                // unique_cycle order
  std::vector<Vertex> root;                 // cycle vertex whose tree contains v
  std::vector<Vertex> parent;               // -1 for cycle vertices
  std::vector<int> depth;                   // 0 on the cycle
  std::vector<std::vector<Vertex>> children;  // tree children, ascending
};

HangingForest hanging_forest(const Graph& g);

}  // namespace slee
