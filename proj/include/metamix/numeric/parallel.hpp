#pragma once

#include <cstddef>
#include <functional>

namespace metamix::numeric {

/// Worker threads used by parallel_for. Defaults to 1.
void set_num_threads(std::size_t n);
std::size_t num_threads();

/// Runs fn(0..n-1), spreading indices over the worker threads. Each index
/// runs exactly once; callers write results to per-index slots so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace metamix::numeric
