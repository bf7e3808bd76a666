#pragma once

#include <cstddef>
#include <functional>

namespace dunkl {

/// Worker count: DUNKL_LAB_THREADS if set and positive, otherwise hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index runs exactly once;
/// the first exception thrown by any worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dunkl
