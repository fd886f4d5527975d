#pragma once

#include <cstddef>
#include <functional>

namespace elasto {

// 0 = hardware concurrency. Affects parallel_for only.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(i) for i in [0, count). Each index is written by exactly one
// worker, so callers that store into a pre-sized vector get deterministic output.
// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace elasto
