// parallel.hpp — bounded fan-out with deterministic index mapping

#pragma once

#include <functional>

namespace recoil {

// RECOILSIM_THREADS env var, else hardware concurrency, else 1.
int default_threads();

// Runs fn(0..n-1) across at most n_threads workers with static contiguous
// chunking, so the index->worker mapping never depends on timing.
void parallel_for(int n, int n_threads, const std::function<void(int)>& fn);

}  // namespace recoil
