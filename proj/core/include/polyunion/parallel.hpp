#pragma once

#include <cstddef>
#include <functional>

namespace polyunion {

/// Worker count: POLYUNION_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. Results must
/// be written to per-index slots so output order does not depend on the
/// schedule. If any call throws, the exception from the smallest failing
/// index is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace polyunion
