#pragma once

#include <cstddef>
#include <functional>

namespace qsl {

// Worker count: QSL_THREADS if set, else hardware concurrency, at least 1.
int thread_count();

// Runs fn(i) for i in [0, n). Each index writes only its own slot, so the
// result is identical for any worker count; reductions stay with the caller,
// in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qsl
