#include "qbfac/dense_matrix.hpp"

#include <cmath>
#include <utility>

#include "qbfac/kernels.hpp"

namespace qbfac {

DenseMatrix DenseMatrix::from_data(index rows, index cols, std::vector<double> data) {
    if (data.size() != rows * cols)
        throw DimensionError("from_data: buffer length does not match rows*cols");
    DenseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    if (!m.all_finite())
        throw Error("from_data: non-finite entry");
    return m;
}

DenseMatrix DenseMatrix::identity(index n) {
    DenseMatrix m(n, n);
    for (index i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void DenseMatrix::append_columns(const DenseMatrix& other) {
    if (other.cols_ == 0) return;
    if (cols_ == 0 && rows_ == 0) rows_ = other.rows_;
    if (other.rows_ != rows_)
        throw DimensionError("append_columns: row count mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    cols_ += other.cols_;
}

void DenseMatrix::truncate_columns(index new_cols) {
    if (new_cols > cols_)
        throw DimensionError("truncate_columns: cannot grow");
    cols_ = new_cols;
    data_.resize(rows_ * cols_);
}

DenseMatrix DenseMatrix::leading_columns(index c) const {
    return column_range(0, c);
}

DenseMatrix DenseMatrix::column_range(index j0, index j1) const {
    if (j0 > j1 || j1 > cols_)
        throw DimensionError("column_range: bad range");
    DenseMatrix m(rows_, j1 - j0);
    std::copy(data_.begin() + j0 * rows_, data_.begin() + j1 * rows_, m.data_.begin());
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    kernels::transpose(t.data(), data(), rows_, cols_);
    return t;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

void multiply_acc(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double alpha) {
    if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols())
        throw DimensionError("multiply_acc: dimension mismatch");
    kernels::gemm_nn(kernels::active_kernels(), c.data(), a.data(), b.data(),
                     a.rows(), a.cols(), b.cols(), alpha);
}

void multiply_at_b_acc(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double alpha) {
    if (a.rows() != b.rows() || c.rows() != a.cols() || c.cols() != b.cols())
        throw DimensionError("multiply_at_b_acc: dimension mismatch");
    kernels::gemm_tn(kernels::active_kernels(), c.data(), a.data(), b.data(),
                     a.rows(), a.cols(), b.cols(), alpha);
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows(), b.cols());
    multiply_acc(c, a, b, 1.0);
    return c;
}

DenseMatrix multiply_at_b(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.cols(), b.cols());
    multiply_at_b_acc(c, a, b, 1.0);
    return c;
}

double frob_norm_sq(const DenseMatrix& m) {
    return kernels::active_kernels().sum_sq(m.data(), m.size());
}

}  // namespace qbfac
