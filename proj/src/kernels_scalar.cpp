// Scalar reference kernels. These define the semantics every SIMD lane is
// equivalence-tested against.

#include "qbfac/kernels.hpp"

namespace qbfac::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void axpy4_scalar(const double* c, const double* x0, const double* x1,
                  const double* x2, const double* x3, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += c[0] * x0[i] + c[1] * x1[i] + c[2] * x2[i] + c[3] * x3[i];
}

void dot4_scalar(const double* x, const double* y0, const double* y1,
                 const double* y2, const double* y3, std::size_t n, double* out) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
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

double sparse_dot_scalar(const double* values, const std::int32_t* cols,
                         std::size_t nnz, const double* x) {
    double s = 0.0;
    for (std::size_t k = 0; k < nnz; ++k) s += values[k] * x[cols[k]];
    return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table = {
        "scalar",      dot_scalar,  sum_sq_scalar, axpy_scalar,
        scal_scalar,   axpy4_scalar, dot4_scalar,  sparse_dot_scalar,
    };
    return table;
}

}  // namespace qbfac::kernels
