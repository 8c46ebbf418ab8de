#pragma once

#include <cstddef>
#include <functional>

namespace broxlab {

/// Worker count: BROXLAB_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads, in
/// contiguous chunks. The first exception thrown by any worker is rethrown
/// after all workers have joined. Callers write results into per-index
/// slots so the output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace broxlab
