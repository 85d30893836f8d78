#pragma once

#include <cstddef>
#include <functional>

namespace intval {

// Worker count to use for a request of `requested` threads; 0 means all cores.
unsigned resolve_threads(unsigned requested) noexcept;

// Runs body(i) for every i in [0, count) on up to `threads` workers. Each index
// runs exactly once; callers write results into per-index slots so the merge
// order does not depend on scheduling. The first exception thrown by any body
// is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace intval
