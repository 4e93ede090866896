#include <cstdlib>
#include <string_view>

#include "waveguide/simd/kernels.hpp"

namespace wg::simd {

#ifdef WAVEGUIDE_HAVE_AVX2
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#ifdef WAVEGUIDE_HAVE_AVX2
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable& table = []() -> const KernelTable& {
        const char* env = std::getenv("WAVEGUIDE_SIMD");
        const std::string_view choice = env ? env : "";
        if (choice == "scalar") return scalar_kernels();
        if (const KernelTable* fast = avx2_kernels()) return *fast;
        return scalar_kernels();
    }();
    return table;
}

}  // namespace wg::simd
