// Blocked GEMM and CSR drivers shared by all kernel lanes.
//
// Blocking keeps the streamed operand resident in cache:
//  - gemm_nn tiles the inner dimension so the A panel (m x kKBlock) stays hot
//    while every column of C is updated;
//  - gemm_tn tiles rows and output columns so the B tile is reused across the
//    full k loop.

#include "qbfac/kernels.hpp"

#include <algorithm>

namespace qbfac::kernels {

namespace {
constexpr std::size_t kKBlock = 256;   // inner-dimension tile for gemm_nn
constexpr std::size_t kIBlock = 512;   // row tile for gemm_tn
constexpr std::size_t kJBlock = 64;    // output-column tile for gemm_tn
}  // namespace

void gemm_nn(const KernelTable& k, double* c, const double* a, const double* b,
             std::size_t m, std::size_t n, std::size_t p, double alpha) {
    if (m == 0 || n == 0 || p == 0) return;
    for (std::size_t k0 = 0; k0 < n; k0 += kKBlock) {
        std::size_t k1 = std::min(k0 + kKBlock, n);
        for (std::size_t j = 0; j < p; ++j) {
            double* cj = c + j * m;
            const double* bj = b + j * n;
            std::size_t kk = k0;
            for (; kk + 4 <= k1; kk += 4) {
                double coef[4] = {alpha * bj[kk], alpha * bj[kk + 1],
                                  alpha * bj[kk + 2], alpha * bj[kk + 3]};
                k.axpy4(coef, a + kk * m, a + (kk + 1) * m, a + (kk + 2) * m,
                        a + (kk + 3) * m, cj, m);
            }
            for (; kk < k1; ++kk) k.axpy(alpha * bj[kk], a + kk * m, cj, m);
        }
    }
}

void gemm_tn(const KernelTable& k, double* c, const double* a, const double* b,
             std::size_t m, std::size_t n, std::size_t p, double alpha) {
    if (m == 0 || n == 0 || p == 0) return;
    for (std::size_t i0 = 0; i0 < m; i0 += kIBlock) {
        std::size_t len = std::min(kIBlock, m - i0);
        for (std::size_t j0 = 0; j0 < p; j0 += kJBlock) {
            std::size_t j1 = std::min(j0 + kJBlock, p);
            for (std::size_t kk = 0; kk < n; ++kk) {
                const double* ak = a + kk * m + i0;
                std::size_t j = j0;
                for (; j + 4 <= j1; j += 4) {
                    double out[4];
                    k.dot4(ak, b + j * m + i0, b + (j + 1) * m + i0,
                           b + (j + 2) * m + i0, b + (j + 3) * m + i0, len, out);
                    c[kk + j * n] += alpha * out[0];
                    c[kk + (j + 1) * n] += alpha * out[1];
                    c[kk + (j + 2) * n] += alpha * out[2];
                    c[kk + (j + 3) * n] += alpha * out[3];
                }
                for (; j < j1; ++j)
                    c[kk + j * n] += alpha * k.dot(ak, b + j * m + i0, len);
            }
        }
    }
}

void csr_gemm_n(const KernelTable& k, double* y, std::size_t rows, std::size_t p,
                const std::int64_t* row_ptr, const std::int32_t* col_idx,
                const double* values, const double* x, std::size_t x_rows) {
    for (std::size_t j = 0; j < p; ++j) {
        const double* xj = x + j * x_rows;
        double* yj = y + j * rows;
        for (std::size_t i = 0; i < rows; ++i) {
            std::size_t lo = static_cast<std::size_t>(row_ptr[i]);
            std::size_t hi = static_cast<std::size_t>(row_ptr[i + 1]);
            yj[i] = k.sparse_dot(values + lo, col_idx + lo, hi - lo, xj);
        }
    }
}

void csr_gemm_t(double* y, std::size_t rows, std::size_t cols, std::size_t p,
                const std::int64_t* row_ptr, const std::int32_t* col_idx,
                const double* values, const double* x) {
    for (std::size_t j = 0; j < p; ++j) {
        const double* xj = x + j * rows;
        double* yj = y + j * cols;
        for (std::size_t i = 0; i < rows; ++i) {
            double xi = xj[i];
            if (xi == 0.0) continue;
            for (std::int64_t t = row_ptr[i]; t < row_ptr[i + 1]; ++t)
                yj[col_idx[t]] += values[t] * xi;
        }
    }
}

void transpose(double* dst, const double* src, std::size_t m, std::size_t n) {
    constexpr std::size_t kTile = 32;
    for (std::size_t j0 = 0; j0 < n; j0 += kTile) {
        std::size_t j1 = std::min(j0 + kTile, n);
        for (std::size_t i0 = 0; i0 < m; i0 += kTile) {
            std::size_t i1 = std::min(i0 + kTile, m);
            for (std::size_t j = j0; j < j1; ++j)
                for (std::size_t i = i0; i < i1; ++i)
                    dst[j + i * n] = src[i + j * m];
        }
    }
}

}  // namespace qbfac::kernels
