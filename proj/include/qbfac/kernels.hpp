#pragma once

// Vectorized inner loops used by every matrix operation in the library.
//
// Each lane (scalar / AVX2 / NEON) fills a KernelTable with the same set of
// primitives; the blocked GEMM and CSR drivers below are lane-agnostic and
// take the table as a parameter. The active lane is picked once at startup
// from CPU capabilities and can be overridden with QBFAC_KERNELS=scalar|avx2|neon.
//
// Lanes may reassociate reductions, so results can differ between lanes by
// O(eps) rounding noise; within one lane results are bit-reproducible.

#include <cstddef>
#include <cstdint>

namespace qbfac::kernels {

struct KernelTable {
    const char* name;

    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // x *= alpha
    void (*scal)(double alpha, double* x, std::size_t n);
    // y += c[0]*x0 + c[1]*x1 + c[2]*x2 + c[3]*x3
    void (*axpy4)(const double* c, const double* x0, const double* x1,
                  const double* x2, const double* x3, double* y, std::size_t n);
    // out[j] = dot(x, yj)
    void (*dot4)(const double* x, const double* y0, const double* y1,
                 const double* y2, const double* y3, std::size_t n, double* out);
    // sum over k of values[k] * x[cols[k]]
    double (*sparse_dot)(const double* values, const std::int32_t* cols,
                         std::size_t nnz, const double* x);
};

const KernelTable& scalar_kernels();
const KernelTable* avx2_kernels();  // nullptr when not compiled in or CPU lacks AVX2+FMA
const KernelTable* neon_kernels();
const KernelTable& active_kernels();

// ---- lane-agnostic blocked drivers (column-major, ld == rows) --------------

// C(m x p) += alpha * A(m x n) * B(n x p)
void gemm_nn(const KernelTable& k, double* c, const double* a, const double* b,
             std::size_t m, std::size_t n, std::size_t p, double alpha);

// C(n x p) += alpha * A^T * B, with A(m x n), B(m x p)
void gemm_tn(const KernelTable& k, double* c, const double* a, const double* b,
             std::size_t m, std::size_t n, std::size_t p, double alpha);

// Y(m x p) = A * X for CSR A(m x n), X(n x p); Y must be zeroed by the caller.
void csr_gemm_n(const KernelTable& k, double* y, std::size_t rows, std::size_t p,
                const std::int64_t* row_ptr, const std::int32_t* col_idx,
                const double* values, const double* x, std::size_t x_rows);

// Y(n x p) += A^T * X for CSR A(m x n), X(m x p). Scatter pattern, scalar on
// all lanes.
void csr_gemm_t(double* y, std::size_t rows, std::size_t cols, std::size_t p,
                const std::int64_t* row_ptr, const std::int32_t* col_idx,
                const double* values, const double* x);

// dst(n x m) = src(m x n)^T
void transpose(double* dst, const double* src, std::size_t m, std::size_t n);

}  // namespace qbfac::kernels
