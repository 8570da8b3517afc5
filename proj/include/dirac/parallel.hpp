#pragma once

#include <cstddef>
#include <functional>

namespace dirac {

/// Worker count for scan-style loops: DIRAC_HARDY_THREADS if set and nonzero,
/// otherwise the hardware concurrency (clamped to [1, 16]).
unsigned worker_count();

/// Run f(i) for i in [0, n) across the worker pool. Work items must be
/// independent; results should be written to index-addressed slots so the
/// outcome does not depend on the number of workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace dirac
