#pragma once

#include <cstddef>
#include <functional>

namespace randsel {

/// Number of worker threads to use when `requested` is 0 (hardware count).
int resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, n) across `threads` workers using a static block
/// partition. Results written by independent iterations do not depend on the
/// schedule, so callers that write fn(i) output into slot i of a preallocated
/// buffer get bit-identical results for any thread count. The first exception
/// thrown by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace randsel
