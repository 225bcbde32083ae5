#pragma once

#include <cstddef>
#include <functional>

namespace bcb {

// Worker cap: BCB_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for every i in [0, count), spread over up to worker_count()
// threads. Callers write results into slots indexed by i, so the outcome
// does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bcb
