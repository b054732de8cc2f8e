#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace crowdrisk {

/// Worker count for parallel sections; honours CROWDRISK_THREADS when set.
unsigned worker_count();

/// Run fn(i) for i in [0, n) on a small worker pool. Each index owns its own
/// output slot, so results are independent of the worker count and schedule.
/// Exceptions from fn are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace crowdrisk
