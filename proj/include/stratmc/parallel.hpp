#pragma once

#include <cstddef>
#include <functional>

namespace stratmc {

/// Runs body(i) for i in [0, n) on up to `threads` threads, contiguous static
/// chunks per worker. Each index must write only to its own slots, which makes
/// the result independent of the thread count. Exceptions are rethrown once.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

} // namespace stratmc
