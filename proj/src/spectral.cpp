#include "slee/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "slee/errors.hpp"
#include "slee/semiwalk.hpp"

namespace slee {

Eigen::MatrixXi signless_laplacian(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXi q = Eigen::MatrixXi::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) q(v, v) = g.degree(v);
  for (const auto& e : g.edges()) {
    q(e.u, e.v) = 1;
    q(e.v, e.u) = 1;
  }
  return q;
}

std::vector<double> q_spectrum(const Graph& g) {
  if (g.order() == 0) return {};
  const Eigen::MatrixXd q = signless_laplacian(g).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double slee_from_spectrum(const std::vector<double>& descending) {
  double sum = 0.0;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) sum += std::exp(*it);
  return sum;
}

double slee(const Graph& g) { return slee_from_spectrum(q_spectrum(g)); }

namespace {

double moment_from_spectrum(const std::vector<double>& spectrum, int k) {
  double sum = 0.0;
  for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) sum += std::pow(*it, k);
  return sum;
}

}  // namespace

double spectral_moment(const Graph& g, int k) {
  if (k < 0) throw ArgumentError("moment order must be nonnegative");
  if (k == 0) return g.order();
  return moment_from_spectrum(q_spectrum(g), k);
}

SpectralSummary summarize(const Graph& g, int max_moment) {
  if (max_moment < 0) throw ArgumentError("moment order must be nonnegative");
  SpectralSummary s;
  s.eigenvalues = q_spectrum(g);
  s.slee = slee_from_spectrum(s.eigenvalues);
  s.moments.push_back(g.order());
  for (int k = 1; k <= max_moment; ++k) s.moments.push_back(moment_from_spectrum(s.eigenvalues, k));
  return s;
}

SeriesEstimate slee_series(const Graph& g, int max_order) {
  if (max_order < 0) throw ArgumentError("series order must be nonnegative");
  const auto table = walk_counts(g, max_order);
  // Sum the small high-order terms first.
  std::vector<long double> terms(max_order + 1);
  long double factorial = 1.0L;
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) factorial *= k;
    terms[k] = table.trace(k).convert_to<long double>() / factorial;
  }
  long double partial = 0.0L;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) partial += *it;

  const long double bound = 2.0L * g.max_degree();
  long double tail = static_cast<long double>(g.order()) * std::exp(bound);
  for (int j = 1; j <= max_order + 1; ++j) tail *= bound / j;
  return {static_cast<double>(partial), static_cast<double>(tail)};
}

}  // namespace slee
