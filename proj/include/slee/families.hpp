#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

enum class FamilyKind { Cycle, Path, Star, CqS, CqP, G1, G2, Gmin2, Gd };

/// A named family instance. Parameters:
///   Cycle/Path/Star: {n}
///   CqS/CqP:         {q, n_1, ..., n_q}
///   G1/G2/Gmin2:     {n}
///   Gd:              {n, d}
struct FamilySpec {
  FamilyKind kind = FamilyKind::Cycle;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Text form used on the command line: "C:6", "P:6", "S:5", "C3S:2,0,0",
/// "C5P:1,0,0,0,0", "G1:7", "G2:7", "Gmin2:7", "Gd:7,3".
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

/// Constructed graph plus a map from the usual labels (v1, x1, u, ...) to vertex indices.
struct FamilyInstance {
  Graph graph;
  std::vector<std::pair<std::string, Vertex>> roles;
};

FamilyInstance make_family(const FamilySpec& spec);
inline Graph make_graph(const FamilySpec& spec) { return make_family(spec).graph; }

/// Cycle v_1..v_n on vertices 0..n-1 (n >= 3).
Graph make_cycle(int n);
/// Path on vertices 0..n-1 in order (n >= 1).
Graph make_path(int n);
/// K_{1,n-1} centered at 0 (n >= 2).
Graph make_star(int n);

/// C_qS(n_1..n_q): cycle v_i -> vertex i-1, then the n_1 pendants of v_1,
/// the n_2 pendants of v_2, and so on.
Graph make_cqs(int q, const std::vector<int>& pendants);
/// C_qP(n_1..n_q): cycle v_i -> vertex i-1, then the path hanging from v_1
/// (nearest vertex first), the path hanging from v_2, and so on.
Graph make_cqp(int q, const std::vector<int>& path_lengths);

/// G^(1) = C_3S(n-3,0,0), n >= 4.
Graph make_g1(int n);
/// G^(2) = C_3S(n-4,1,0), n >= 5. The pendant y of v_2 is vertex n-1.
Graph make_g2(int n);
/// G_(2) = C_{n-1}P(1,0,...,0), n >= 4. The pendant u is vertex n-1.
Graph make_gmin2(int n);

/// G^d: path v_0..v_d on vertices 0..d, u = d+1 adjacent to v_a and v_{a+1},
/// n-d-2 pendants of v_a on d+2..n-1, with a = floor(d/2). Needs 2 <= d <= n-2.
Graph make_gd(int n, int d);

}  // namespace slee
