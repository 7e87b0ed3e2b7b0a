#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "slee/canonical.hpp"
#include "slee/graph.hpp"

namespace slee {

enum class Schedule { Static, Dynamic };

/// threads == 0 means the OpenMP default, capped by the SLEE_THREADS
/// environment variable when that is set.
struct ParallelOptions {
  int threads = 0;
  Schedule schedule = Schedule::Dynamic;
};

int resolve_threads(const ParallelOptions& options);

/// body(i) for i in [0, count) across OpenMP threads. The first exception
/// thrown by any iteration is rethrown on the calling thread.
void parallel_for_index(std::size_t count, const ParallelOptions& options, const std::function<void(std::size_t)>& body);

/// SLEE of every graph, OpenMP over graphs.
std::vector<double> slee_batch(std::span<const Graph> graphs, const ParallelOptions& options = {});
/// Single-threaded reference for slee_batch.
std::vector<double> slee_batch_serial(std::span<const Graph> graphs);

std::vector<CanonicalForm> canonical_batch(std::span<const Graph> graphs, const ParallelOptions& options = {});
std::vector<CanonicalForm> canonical_batch_serial(std::span<const Graph> graphs);

}  // namespace slee
