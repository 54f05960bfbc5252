#pragma once

#include <cstddef>
#include <functional>

namespace doflab {

// Thread budget: hardware concurrency capped by the DOF_LAB_THREADS
// environment variable (values < 1 are ignored).
std::size_t max_threads();

// Runs body(0..n-1) across up to max_threads() workers. Indices are
// partitioned statically so results written per-index are deterministic;
// the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace doflab
