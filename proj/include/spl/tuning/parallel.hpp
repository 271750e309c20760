#pragma once

#include <functional>

namespace spl {

/// Runs fn(0..n-1) on up to `jobs` threads (jobs <= 1 runs inline). Callers
/// write results by index, so the outcome does not depend on scheduling.
/// The first exception thrown by a task is rethrown after all threads join.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace spl
