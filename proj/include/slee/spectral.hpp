#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

/// Eigenvalues of Q = D + A (descending), the index sum of exp(q_i), and T_0..T_K.
struct SpectralSummary {
  std::vector<double> eigenvalues;
  double slee = 0.0;
  std::vector<double> moments;
};

/// Q = D + A.
Eigen::MatrixXi signless_laplacian(const Graph& g);

/// Eigenvalues of Q, sorted descending. Throws NumericError if the solver fails.
std::vector<double> q_spectrum(const Graph& g);

/// sum_i exp(q_i), accumulated from the smallest eigenvalue up.
double slee(const Graph& g);
double slee_from_spectrum(const std::vector<double>& descending);

/// T_k = sum_i q_i^k from the floating-point spectrum.
double spectral_moment(const Graph& g, int k);

SpectralSummary summarize(const Graph& g, int max_moment);

/// Truncated power series sum_{k<=K} T_k / k! with exact integer T_k, plus a
/// Lagrange bound n * b^(K+1) * e^b / (K+1)! on the tail, where b = 2 * max degree >= q_1.
struct SeriesEstimate {
  double partial_sum = 0.0;
  double remainder_bound = 0.0;
};

SeriesEstimate slee_series(const Graph& g, int max_order);

}  // namespace slee
