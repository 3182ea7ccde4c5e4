#pragma once

#include <cstddef>
#include <functional>

namespace hyperflow {

/// Number of worker threads to use: the HYPERFLOW_THREADS environment
/// variable when set to a positive value, otherwise (or when set to 0) the
/// hardware concurrency.
unsigned thread_budget();

/// Runs body(0) .. body(n-1) across the thread budget. Bodies must be
/// independent; any exception is rethrown on the calling thread after all
/// workers have joined. Result ordering is the caller's concern (write into
/// preallocated slots by index).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hyperflow
