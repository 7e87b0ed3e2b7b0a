#include "slee/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "slee/errors.hpp"

namespace slee {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxOrder) {
    throw ArgumentError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw ArgumentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has an endpoint outside 0.." +
                          std::to_string(n - 1));
    }
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ArgumentError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  adjacency_.assign(n, {});
  rows_.assign(n, 0);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    rows_[e.u] |= std::uint64_t{1} << e.v;
    rows_[e.v] |= std::uint64_t{1} << e.u;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                        " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] >> v) & 1U;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[v].size());
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = static_cast<int>(adjacency_[v].size());
  return out;
}

std::vector<Vertex> Graph::non_pendent_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w : neighbors(v)) {
    if (adjacency_[w].size() >= 2) out.push_back(w);
  }
  return out;
}

Graph Graph::edited(std::span<const Edge> add, std::span<const Edge> remove) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size() + add.size());
  std::vector<Edge> dropped;
  for (const auto& e : remove) dropped.push_back(make_edge(e.u, e.v));
  std::sort(dropped.begin(), dropped.end());
  for (const auto& e : dropped) {
    if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
      throw ArgumentError("cannot remove missing edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  for (const auto& e : edges_) {
    if (!std::binary_search(dropped.begin(), dropped.end(), e)) kept.push_back(e);
  }
  kept.insert(kept.end(), add.begin(), add.end());
  return Graph(n_, std::move(kept));
}

Graph Graph::with_isolated_vertices(int k) const { return Graph(n_ + k, edges_); }

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ArgumentError("relabeling has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw ArgumentError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& e : edges_) mapped.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(n_, std::move(mapped));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbor_mask(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

bool is_unicyclic(const Graph& g) {
  return g.order() >= 3 && g.size() == static_cast<std::size_t>(g.order()) && is_connected(g);
}

std::vector<Vertex> unique_cycle(const Graph& g) {
  if (!is_unicyclic(g)) throw ContractError("unique_cycle: graph is not unicyclic");
  const int n = g.order();
  std::vector<int> deg = g.degrees();
  std::vector<bool> removed(n, false);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {  // ascending, so the first pick from start is the smaller neighbor
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == start || next == -1) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  g.neighbors(source);  // range check
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  return distances_from(g, u)[v];
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw ContractError("diameter: graph is disconnected");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

HangingForest hanging_forest(const Graph& g) {
  HangingForest forest;
  forest.cycle = unique_cycle(g);
  const int n = g.order();
  forest.root.assign(n, -1);
  forest.parent.assign(n, -1);
  forest.depth.assign(n, 0);
  forest.children.assign(n, {});
  std::deque<Vertex> queue;
  for (Vertex c : forest.cycle) {
    forest.root[c] = c;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (forest.root[w] != -1) continue;
      forest.root[w] = forest.root[v];
      forest.parent[w] = v;
      forest.depth[w] = forest.depth[v] + 1;
      forest.children[v].push_back(w);
      queue.push_back(w);
    }
  }
  return forest;
}

}  // namespace slee
