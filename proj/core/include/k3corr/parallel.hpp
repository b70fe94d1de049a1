#pragma once

#include <functional>

namespace k3corr {

// Worker cap: K3CORR_THREADS when set (clamped to >= 1), else hardware concurrency.
// Read on every call so tests can flip the variable at runtime.
unsigned worker_count();

// Splits [lo, hi) into contiguous chunks and runs fn(begin, end) on each, across
// worker_count() threads. Runs inline when the range is below min_chunk or only
// one worker is available. fn must be safe to call concurrently on disjoint chunks.
void parallel_chunks(long lo, long hi, long min_chunk,
                     const std::function<void(long, long)>& fn);

}  // namespace k3corr
