// ARM NEON kernels (float64x2). Mirrors the AVX2 lane at width 2.

#include "qbfac/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

namespace qbfac::kernels {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum_sq_neon(const double* x, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t a = vld1q_f64(x + i);
        float64x2_t b = vld1q_f64(x + i + 2);
        acc0 = vfmaq_f64(acc0, a, a);
        acc1 = vfmaq_f64(acc1, b, b);
    }
    double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_neon(double alpha, double* x, std::size_t n) {
    float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void axpy4_neon(const double* c, const double* x0, const double* x1,
                const double* x2, const double* x3, double* y, std::size_t n) {
    float64x2_t c0 = vdupq_n_f64(c[0]);
    float64x2_t c1 = vdupq_n_f64(c[1]);
    float64x2_t c2 = vdupq_n_f64(c[2]);
    float64x2_t c3 = vdupq_n_f64(c[3]);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vld1q_f64(y + i);
        acc = vfmaq_f64(acc, c0, vld1q_f64(x0 + i));
        acc = vfmaq_f64(acc, c1, vld1q_f64(x1 + i));
        acc = vfmaq_f64(acc, c2, vld1q_f64(x2 + i));
        acc = vfmaq_f64(acc, c3, vld1q_f64(x3 + i));
        vst1q_f64(y + i, acc);
    }
    for (; i < n; ++i)
        y[i] += c[0] * x0[i] + c[1] * x1[i] + c[2] * x2[i] + c[3] * x3[i];
}

void dot4_neon(const double* x, const double* y0, const double* y1,
               const double* y2, const double* y3, std::size_t n, double* out) {
    float64x2_t a0 = vdupq_n_f64(0.0);
    float64x2_t a1 = vdupq_n_f64(0.0);
    float64x2_t a2 = vdupq_n_f64(0.0);
    float64x2_t a3 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vx = vld1q_f64(x + i);
        a0 = vfmaq_f64(a0, vx, vld1q_f64(y0 + i));
        a1 = vfmaq_f64(a1, vx, vld1q_f64(y1 + i));
        a2 = vfmaq_f64(a2, vx, vld1q_f64(y2 + i));
        a3 = vfmaq_f64(a3, vx, vld1q_f64(y3 + i));
    }
    double s0 = vaddvq_f64(a0), s1 = vaddvq_f64(a1);
    double s2 = vaddvq_f64(a2), s3 = vaddvq_f64(a3);
    for (; i < n; ++i) {
        s0 += x[i] * y0[i];
        s1 += x[i] * y1[i];
        s2 += x[i] * y2[i];
        s3 += x[i] * y3[i];
    }
    out[0] = s0;
    out[1] = s1;
    out[2] = s2;
    out[3] = s3;
}

// No NEON scatter/gather worth using here; scalar indexed loads.
double sparse_dot_neon(const double* values, const std::int32_t* cols,
                       std::size_t nnz, const double* x) {
    double s = 0.0;
    for (std::size_t k = 0; k < nnz; ++k) s += values[k] * x[cols[k]];
    return s;
}

}  // namespace

const KernelTable* neon_table_impl() {
    static const KernelTable table = {
        "neon",    dot_neon,   sum_sq_neon, axpy_neon,
        scal_neon, axpy4_neon, dot4_neon,   sparse_dot_neon,
    };
    return &table;
}

}  // namespace qbfac::kernels

#else

namespace qbfac::kernels {
const KernelTable* neon_table_impl() { return nullptr; }
}  // namespace qbfac::kernels

#endif
