#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "slee/graph.hpp"
#include "slee/semiwalk.hpp"

namespace oracle {

using slee::BigInt;
using slee::Edge;
using slee::Graph;

/// Lexicographically smallest sorted edge list over all n! relabelings.
inline std::vector<Edge> brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    for (const auto& e : g.edges()) mapped.push_back(slee::make_edge(perm[e.u], perm[e.v]));
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = std::move(mapped);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
}

/// Semi-edge walks counted straight from the definition: each step picks an
/// incident edge of the current vertex and either stays or crosses it.
inline std::uint64_t naive_walks(const Graph& g, int x, int y, int k) {
  if (k == 0) return x == y ? 1 : 0;
  std::uint64_t total = 0;
  for (int z : g.neighbors(x)) {
    total += naive_walks(g, x, y, k - 1);  // stand still on edge xz
    total += naive_walks(g, z, y, k - 1);  // cross it
  }
  return total;
}

/// trace(Q^k) by dense big-integer multiplication.
inline BigInt dense_trace(const Graph& g, int k) {
  const int n = g.order();
  std::vector<std::vector<BigInt>> q(n, std::vector<BigInt>(n, 0)), p(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) {
    p[i][i] = 1;
    q[i][i] = g.degree(i);
    for (int j : g.neighbors(i)) q[i][j] = 1;
  }
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (p[i][l] != 0)
          for (int j = 0; j < n; ++j) r[i][j] += p[i][l] * q[l][j];
    p = std::move(r);
  }
  BigInt t = 0;
  for (int i = 0; i < n; ++i) t += p[i][i];
  return t;
}

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j : g.neighbors(i)) d[i][j] = 1;
  }
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Graph(n, edges).relabeled(perm);
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  Graph t = random_tree(n, rng);
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!t.adjacent(i, j) && coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

inline Graph random_unicyclic(int n, std::mt19937_64& rng) {
  for (;;) {
    Graph t = random_tree(n, rng);
    int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b || t.adjacent(a, b)) continue;
    std::vector<Edge> add{slee::make_edge(a, b)};
    return t.edited(add, {});
  }
}

}  // namespace oracle
