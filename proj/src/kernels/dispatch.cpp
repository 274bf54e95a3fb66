#include <cstdlib>
#include <cstring>

#include "patlab/kernels.hpp"

namespace patlab::kernels {

#if defined(__x86_64__) && defined(PATLAB_HAVE_AVX2)
const KernelSet* avx2_impl();  // kernels_avx2.cpp
#endif

const KernelSet* avx2() {
#if defined(__x86_64__) && defined(PATLAB_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_impl();
#endif
    return nullptr;
}

namespace {

const KernelSet& resolve() {
    if (const char* forced = std::getenv("PATLAB_KERNELS")) {
        if (std::strcmp(forced, "scalar") == 0) return scalar();
        if (std::strcmp(forced, "avx2") == 0 && avx2() != nullptr) return *avx2();
        // Unknown or unavailable request: fall through to auto-detection.
    }
    if (const KernelSet* v = avx2()) return *v;
    return scalar();
}

}  // namespace

const KernelSet& active() {
    static const KernelSet& chosen = resolve();
    return chosen;
}

}  // namespace patlab::kernels
