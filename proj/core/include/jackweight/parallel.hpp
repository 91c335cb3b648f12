#pragma once

#include <cstddef>
#include <functional>

namespace jw {

// JACKWEIGHT_THREADS if set, otherwise the hardware concurrency.
int default_threads();

// Runs fn(i) for i in [0, n) on a static contiguous tiling; the first exception is rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace jw
