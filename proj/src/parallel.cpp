// parallel.cpp

#include "recoil/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace recoil {

int default_threads() {
    if (const char* env = std::getenv("RECOILSIM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc >= 1 ? static_cast<int>(hc) : 1;
}

void parallel_for(int n, int n_threads, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    n_threads = std::min(std::max(n_threads, 1), n);
    if (n_threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errs(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        const int lo = static_cast<int>(std::int64_t(n) * t / n_threads);
        const int hi = static_cast<int>(std::int64_t(n) * (t + 1) / n_threads);
        workers.emplace_back([&, lo, hi, t] {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace recoil
