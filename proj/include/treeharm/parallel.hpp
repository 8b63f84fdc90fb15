#pragma once

#include <cstddef>
#include <functional>

namespace treeharm {

// Worker count: TREEHARM_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() workers. Each index is
// processed exactly once and writes only to its own output slot, so results
// are identical for every thread count. Exceptions from workers are rethrown
// on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace treeharm
