#pragma once

#include <span>
#include <vector>

#include "qbfac/types.hpp"

namespace qbfac {

/// Column-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(index rows, index cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    /// Builds from raw column-major data; rejects NaN/Inf entries.
    static DenseMatrix from_data(index rows, index cols, std::vector<double> data);
    static DenseMatrix identity(index n);

    index rows() const { return rows_; }
    index cols() const { return cols_; }
    index size() const { return data_.size(); }

    double& operator()(index i, index j) { return data_[i + j * rows_]; }
    double operator()(index i, index j) const { return data_[i + j * rows_]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* col(index j) { return data_.data() + j * rows_; }
    const double* col(index j) const { return data_.data() + j * rows_; }
    std::span<const double> col_span(index j) const { return {col(j), rows_}; }

    /// Appends the columns of `other` (same row count).
    void append_columns(const DenseMatrix& other);
    void truncate_columns(index new_cols);
    DenseMatrix leading_columns(index c) const;
    DenseMatrix column_range(index j0, index j1) const;
    DenseMatrix transposed() const;

    bool all_finite() const;

private:
    index rows_ = 0;
    index cols_ = 0;
    std::vector<double> data_;
};

// a * b
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
// a^T * b
DenseMatrix multiply_at_b(const DenseMatrix& a, const DenseMatrix& b);
// c += alpha * a * b
void multiply_acc(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double alpha);
// c += alpha * a^T * b
void multiply_at_b_acc(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double alpha);

double frob_norm_sq(const DenseMatrix& m);

}  // namespace qbfac
