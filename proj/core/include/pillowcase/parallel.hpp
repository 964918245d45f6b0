#pragma once

#include <cstddef>
#include <functional>

namespace pillowcase {

/// Worker count: PILLOWCASE_THREADS when set, otherwise hardware concurrency.
unsigned worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on worker_count() threads.
/// Chunks are contiguous, so idempotent writes to disjoint slots are safe.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace pillowcase
