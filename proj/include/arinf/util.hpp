#pragma once

#include <cstddef>
#include <functional>

namespace arinf {

// Thread cap resolution: ARINF_THREADS if set (>=1), else hardware concurrency.
unsigned max_threads();

// Runs fn(i) for i in [0, n). Chunking and result ordering are fixed and
// independent of the thread count, so parallel reductions built on top of
// this stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace arinf
