// Worker-count control and a chunked parallel_for for elementwise pixel
// loops. Outputs never depend on the worker count: every element is
// computed independently and written to its own slot.

#pragma once

#include <cstddef>
#include <functional>

namespace seud {

// SEUD_THREADS caps the worker count; 0 or unset = hardware concurrency.
int worker_count();

// Runs fn(begin, end) over disjoint contiguous chunks of [0, n).
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

} // namespace seud
