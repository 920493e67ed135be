#pragma once

#include <cstddef>
#include <functional>

namespace rmt {

// Worker count: RMT_THREADS if set, else hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, count).  Tasks must be independent; Monte Carlo
// callers key their RNG stream on i, so results do not depend on the
// schedule.  Runs inline when the pool would have a single worker.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace rmt
