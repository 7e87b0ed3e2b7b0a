#include "slee/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>

#include "slee/spectral.hpp"

namespace slee {

int resolve_threads(const ParallelOptions& options) {
  int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  if (const char* cap = std::getenv("SLEE_THREADS"); cap != nullptr) {
    const int limit = std::atoi(cap);
    if (limit > 0) threads = std::min(threads, limit);
  }
  return std::max(threads, 1);
}

namespace {

void apply_schedule(Schedule schedule) {
  omp_set_schedule(schedule == Schedule::Static ? omp_sched_static : omp_sched_dynamic, schedule == Schedule::Static ? 0 : 4);
}

}  // namespace

void parallel_for_index(std::size_t count, const ParallelOptions& options, const std::function<void(std::size_t)>& body) {
  apply_schedule(options.schedule);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(runtime) num_threads(resolve_threads(options))
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<double> slee_batch(std::span<const Graph> graphs, const ParallelOptions& options) {
  std::vector<double> out(graphs.size());
  parallel_for_index(graphs.size(), options, [&](std::size_t i) { out[i] = slee(graphs[i]); });
  return out;
}

std::vector<double> slee_batch_serial(std::span<const Graph> graphs) {
  std::vector<double> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(slee(g));
  return out;
}

std::vector<CanonicalForm> canonical_batch(std::span<const Graph> graphs, const ParallelOptions& options) {
  std::vector<CanonicalForm> out(graphs.size());
  parallel_for_index(graphs.size(), options, [&](std::size_t i) { out[i] = canonical_form(graphs[i]); });
  return out;
}

std::vector<CanonicalForm> canonical_batch_serial(std::span<const Graph> graphs) {
  std::vector<CanonicalForm> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(canonical_form(g));
  return out;
}

}  // namespace slee
