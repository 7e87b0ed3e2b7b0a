#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slee/enumeration.hpp"
#include "slee/families.hpp"
#include "slee/parallel.hpp"
#include "slee/transforms.hpp"

namespace slee {

/// Absolute SLEE gap required before a strict extremal claim counts as passed.
inline constexpr double kStrictMargin = 1e-6;

enum class TheoremId { Max, SecondMax, Min, SecondMin, DiameterMax };
enum class Verdict { Pass, Fail, Inconclusive, Vacuous };

std::string_view to_string(TheoremId id);
std::string_view to_string(Verdict v);

struct RankedGraph {
  std::string g6;
  double slee = 0.0;
};

/// One extremal claim checked over a whole enumeration universe.
struct TheoremReport {
  TheoremId theorem = TheoremId::Max;
  int n = 0;
  std::optional<int> d;
  Verdict verdict = Verdict::Vacuous;
  std::string expected_family;  // e.g. "G1:7"; empty when vacuous
  std::string expected_g6;      // canonical representative
  std::string found_g6;
  bool expected_in_universe = false;
  std::vector<RankedGraph> slee_top;  // up to 5, best first in the theorem's direction
  /// Gap between the extremal graph and the runner-up of the same universe.
  /// Empty when the universe has a single graph (uniqueness is then trivial).
  std::optional<double> margin;
  std::size_t universe_size = 0;
  double runtime_ms = 0.0;
  std::string note;
};

/// Largest SLEE is G^(1); largest among the rest is G^(2) (n >= 5).
std::pair<TheoremReport, TheoremReport> verify_max(int n, const ParallelOptions& options = {});
/// Smallest SLEE is C_n; smallest among the rest is G_(2).
std::pair<TheoremReport, TheoremReport> verify_min(int n, const ParallelOptions& options = {});
/// Largest SLEE among diameter-d graphs is G^d. Needs 2 <= d <= n-2.
TheoremReport verify_diameter_max(int n, int d, const ParallelOptions& options = {});

/// Same checks against a caller-supplied universe (the reports carry no timing).
std::pair<TheoremReport, TheoremReport> verify_max(const EnumerationResult& universe, const ParallelOptions& options = {});
std::pair<TheoremReport, TheoremReport> verify_min(const EnumerationResult& universe, const ParallelOptions& options = {});
TheoremReport verify_diameter_max(const EnumerationResult& universe, int d, const ParallelOptions& options = {});

enum class ChainKind { Max, Min };
std::string_view to_string(ChainKind k);

/// One neighbor transfer applied while walking a graph toward the extremal one.
struct ProofStep {
  std::string rule;  // star-collapse, cycle-shrink, pendant-consolidation, path-straighten, path-absorb
  std::string source_g6;
  std::string result_g6;
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> moved;
  TransferLemmaCheck check;
  double slee_before = 0.0;
  double slee_after = 0.0;
  bool verified = false;    // lemma hypotheses hold up to K
  bool wrong_sign = false;  // verified, yet SLEE moved the wrong way (or by <= tolerance)
};

struct ProofChain {
  ChainKind kind = ChainKind::Max;
  std::string start_g6;
  std::string end_g6;
  std::string target_family;
  std::vector<ProofStep> steps;
  bool reached_target = false;

  /// Every step verified, none with the wrong sign, and the target reached.
  bool verified_monotone() const;
};

/// SLEE-increasing transfers ending at G^(1) (C_3 when n == 3).
ProofChain replay_max_chain(const Graph& g, int max_length = kDefaultMaxLength);
/// SLEE-decreasing transfers ending at C_n.
ProofChain replay_min_chain(const Graph& g, int max_length = kDefaultMaxLength);

inline constexpr int kMaxReplayOrder = 8;

/// Max and min chains for every non-extremal unicyclic graph on n vertices,
/// max chains first, each group in enumeration order.
std::vector<ProofChain> replay_proof_steps(int n, const ParallelOptions& options = {},
                                           int max_length = kDefaultMaxLength);

}  // namespace slee
