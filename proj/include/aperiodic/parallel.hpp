#pragma once

#include <cstddef>
#include <functional>

namespace aperiodic {

// Worker count: APERIODIC_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, count), split into contiguous blocks over
// worker_count() threads. body must only write to slot i of its outputs.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace aperiodic
