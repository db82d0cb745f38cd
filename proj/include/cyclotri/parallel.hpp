#pragma once

#include <cstddef>
#include <functional>

namespace cyclotri {

/// Worker cap: CYCLOTRI_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned thread_cap();

/// Calls body(i) for i in [0, count) on up to thread_cap() threads.  The
/// first exception thrown by a body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cyclotri
