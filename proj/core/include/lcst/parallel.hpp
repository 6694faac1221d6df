#pragma once

#include <cstddef>
#include <functional>

namespace lcst {

/// Number of worker threads: LCST_THREADS env var if set (min 1), else
/// hardware concurrency.
std::size_t thread_count();

/// Runs fn(i) for i in [0, n). Work is split into contiguous blocks, one per
/// thread; each index is processed exactly once, so results are independent
/// of the thread count as long as fn(i) touches only slot i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lcst
