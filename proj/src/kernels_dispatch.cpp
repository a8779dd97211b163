#include "qbfac/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qbfac::kernels {

#if defined(QBFAC_AVX2_TU)
const KernelTable* avx2_table_impl();
#endif
#if defined(QBFAC_NEON_TU)
const KernelTable* neon_table_impl();
#endif

const KernelTable* avx2_kernels() {
#if defined(QBFAC_AVX2_TU)
    static const KernelTable* table = []() -> const KernelTable* {
#if defined(__GNUC__) || defined(__clang__)
        if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
            return nullptr;
#endif
        return avx2_table_impl();
    }();
    return table;
#else
    return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(QBFAC_NEON_TU)
    return neon_table_impl();
#else
    return nullptr;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable* table = []() -> const KernelTable* {
        if (const char* env = std::getenv("QBFAC_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
            if (std::strcmp(env, "avx2") == 0 && avx2_kernels()) return avx2_kernels();
            if (std::strcmp(env, "neon") == 0 && neon_kernels()) return neon_kernels();
        }
        if (const KernelTable* t = avx2_kernels()) return t;
        if (const KernelTable* t = neon_kernels()) return t;
        return &scalar_kernels();
    }();
    return *table;
}

}  // namespace qbfac::kernels
