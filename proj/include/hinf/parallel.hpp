#pragma once

#include <cstddef>
#include <functional>

namespace hinf {

/// Worker count: LAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Calls fn(i) for i in [0, count) across worker_count() threads. Each index
/// is visited exactly once; callers write results to distinct slots, so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hinf
