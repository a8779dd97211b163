// AVX2+FMA kernels. Compiled with -mavx2 -mfma; only reached after the
// dispatcher has confirmed CPU support at runtime.

#include "qbfac/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace qbfac::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum_sq_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d a = _mm256_loadu_pd(x + i);
        __m256d b = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(x + i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        __m256d y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4));
        _mm256_storeu_pd(y + i, y0);
        _mm256_storeu_pd(y + i + 4, y1);
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, std::size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void axpy4_avx2(const double* c, const double* x0, const double* x1,
                const double* x2, const double* x3, double* y, std::size_t n) {
    __m256d c0 = _mm256_set1_pd(c[0]);
    __m256d c1 = _mm256_set1_pd(c[1]);
    __m256d c2 = _mm256_set1_pd(c[2]);
    __m256d c3 = _mm256_set1_pd(c[3]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_fmadd_pd(c0, _mm256_loadu_pd(x0 + i), acc);
        acc = _mm256_fmadd_pd(c1, _mm256_loadu_pd(x1 + i), acc);
        acc = _mm256_fmadd_pd(c2, _mm256_loadu_pd(x2 + i), acc);
        acc = _mm256_fmadd_pd(c3, _mm256_loadu_pd(x3 + i), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i)
        y[i] += c[0] * x0[i] + c[1] * x1[i] + c[2] * x2[i] + c[3] * x3[i];
}

void dot4_avx2(const double* x, const double* y0, const double* y1,
               const double* y2, const double* y3, std::size_t n, double* out) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd();
    __m256d a3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        a0 = _mm256_fmadd_pd(vx, _mm256_loadu_pd(y0 + i), a0);
        a1 = _mm256_fmadd_pd(vx, _mm256_loadu_pd(y1 + i), a1);
        a2 = _mm256_fmadd_pd(vx, _mm256_loadu_pd(y2 + i), a2);
        a3 = _mm256_fmadd_pd(vx, _mm256_loadu_pd(y3 + i), a3);
    }
    double s0 = hsum(a0), s1 = hsum(a1), s2 = hsum(a2), s3 = hsum(a3);
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

double sparse_dot_avx2(const double* values, const std::int32_t* cols,
                       std::size_t nnz, const double* x) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= nnz; k += 4) {
        __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
        __m256d xv = _mm256_i32gather_pd(x, idx, 8);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(values + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < nnz; ++k) s += values[k] * x[cols[k]];
    return s;
}

}  // namespace

const KernelTable* avx2_table_impl() {
    static const KernelTable table = {
        "avx2",     dot_avx2,   sum_sq_avx2, axpy_avx2,
        scal_avx2,  axpy4_avx2, dot4_avx2,   sparse_dot_avx2,
    };
    return &table;
}

}  // namespace qbfac::kernels

#else

namespace qbfac::kernels {
const KernelTable* avx2_table_impl() { return nullptr; }
}  // namespace qbfac::kernels

#endif
