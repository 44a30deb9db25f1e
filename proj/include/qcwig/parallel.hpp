#pragma once

#include <cstddef>
#include <functional>

namespace qcwig {

/// Worker count from QCWIG_THREADS; unset or 0 means hardware concurrency.
std::size_t thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
/// handled by exactly one chunk, so per-index results do not depend on the
/// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qcwig
