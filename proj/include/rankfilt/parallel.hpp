#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rankfilt {

// Global cap on worker threads (0 = pick from hardware). Set once by the CLI.
unsigned& worker_thread_cap();

// Runs fn(i) for i in [0, n). Work items must write results only to
// caller-owned slots addressed by i, so the merged output is independent of
// scheduling. Blocks until all items finish; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rankfilt
