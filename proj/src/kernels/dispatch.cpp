// kernels/dispatch.cpp — runtime backend selection

#include <atomic>
#include <cstdlib>

#include "recoil/kernels.hpp"

namespace recoil::kernels {

namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
    const char* env = std::getenv("RECOIL_KERNELS");
    if (env) {
        std::string want(env);
        if (want == "scalar") return &scalar_backend();
        if (want == "avx2") {
            if (const Backend* b = avx2_backend()) return b;
            return &scalar_backend();
        }
    }
    if (const Backend* b = avx2_backend()) return b;
    return &scalar_backend();
}

}  // namespace

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = pick_default();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

bool set_backend(const std::string& name) {
    if (name == "scalar") {
        g_active.store(&scalar_backend(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (const Backend* b = avx2_backend()) {
            g_active.store(b, std::memory_order_release);
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace recoil::kernels
