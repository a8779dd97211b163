#pragma once

#include <cstdint>
#include <vector>

#include "qbfac/dense_matrix.hpp"
#include "qbfac/types.hpp"

namespace qbfac {

/// Compressed-sparse-row matrix.
/// Invariants enforced on construction: row_ptr non-decreasing with
/// row_ptr[0] == 0 and row_ptr[rows] == nnz; column indices strictly
/// increasing within each row and < cols; finite values.
class SparseCsrMatrix {
public:
    struct Triplet {
        index row;
        index col;
        double value;
    };

    SparseCsrMatrix() = default;

    static SparseCsrMatrix from_parts(index rows, index cols,
                                      std::vector<std::int64_t> row_ptr,
                                      std::vector<std::int32_t> col_idx,
                                      std::vector<double> values);
    /// Sorts triplets by (row, col); duplicate coordinates are rejected.
    static SparseCsrMatrix from_triplets(index rows, index cols,
                                         std::vector<Triplet> triplets);

    index rows() const { return rows_; }
    index cols() const { return cols_; }
    index nnz() const { return values_.size(); }

    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    DenseMatrix to_dense() const;

private:
    index rows_ = 0;
    index cols_ = 0;
    std::vector<std::int64_t> row_ptr_{0};
    std::vector<std::int32_t> col_idx_;
    std::vector<double> values_;
};

}  // namespace qbfac
