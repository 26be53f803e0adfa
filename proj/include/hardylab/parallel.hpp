#pragma once

#include <cstddef>
#include <functional>

namespace hardylab {

/// Worker cap: HARDY_LAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Results must be
/// written to per-index slots so gather order stays deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hardylab
