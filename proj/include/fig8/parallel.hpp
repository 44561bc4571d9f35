#pragma once

#include <cstddef>
#include <functional>

namespace fig8 {

// Hardware concurrency, capped by the FIG8_THREADS environment variable
// when it holds a positive integer.
int worker_count();

// Calls fn(i) for i in [0, n) on up to worker_count() threads. Results must
// be written to per-index slots; the lowest-index exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fig8
