#pragma once

#include <cstddef>
#include <functional>

namespace mnlab {

/// Worker count: min(hardware_concurrency, MNLAB_THREADS) with a floor of 1.
unsigned thread_budget();

/// Runs fn(i) for i in [0, n). Tasks must write only to their own slots;
/// results are then independent of the schedule. Executes inline when the
/// budget is 1 or n < 2.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mnlab
