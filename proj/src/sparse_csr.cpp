#include "qbfac/sparse_csr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qbfac {

SparseCsrMatrix SparseCsrMatrix::from_parts(index rows, index cols,
                                            std::vector<std::int64_t> row_ptr,
                                            std::vector<std::int32_t> col_idx,
                                            std::vector<double> values) {
    if (cols > static_cast<index>(std::numeric_limits<std::int32_t>::max()))
        throw DimensionError("csr: column count exceeds 32-bit index range");
    if (row_ptr.size() != rows + 1 || row_ptr.front() != 0 ||
        row_ptr.back() != static_cast<std::int64_t>(values.size()) ||
        col_idx.size() != values.size())
        throw FormatError("csr: inconsistent structure arrays");
    for (index i = 0; i < rows; ++i) {
        if (row_ptr[i] > row_ptr[i + 1])
            throw FormatError("csr: row_ptr not non-decreasing");
        for (std::int64_t t = row_ptr[i]; t < row_ptr[i + 1]; ++t) {
            if (col_idx[t] < 0 || static_cast<index>(col_idx[t]) >= cols)
                throw FormatError("csr: column index out of range");
            if (t > row_ptr[i] && col_idx[t] <= col_idx[t - 1])
                throw FormatError("csr: column indices not strictly increasing");
        }
    }
    for (double v : values)
        if (!std::isfinite(v)) throw Error("csr: non-finite value");

    SparseCsrMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_ = std::move(row_ptr);
    m.col_idx_ = std::move(col_idx);
    m.values_ = std::move(values);
    return m;
}

SparseCsrMatrix SparseCsrMatrix::from_triplets(index rows, index cols,
                                               std::vector<Triplet> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<std::int64_t> row_ptr(rows + 1, 0);
    std::vector<std::int32_t> col_idx;
    std::vector<double> values;
    col_idx.reserve(triplets.size());
    values.reserve(triplets.size());
    for (index t = 0; t < triplets.size(); ++t) {
        const Triplet& tr = triplets[t];
        if (tr.row >= rows || tr.col >= cols)
            throw FormatError("csr: triplet coordinate out of range");
        if (t > 0 && triplets[t - 1].row == tr.row && triplets[t - 1].col == tr.col)
            throw FormatError("csr: duplicate coordinate");
        row_ptr[tr.row + 1]++;
        col_idx.push_back(static_cast<std::int32_t>(tr.col));
        values.push_back(tr.value);
    }
    for (index i = 0; i < rows; ++i) row_ptr[i + 1] += row_ptr[i];
    return from_parts(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

DenseMatrix SparseCsrMatrix::to_dense() const {
    DenseMatrix d(rows_, cols_);
    for (index i = 0; i < rows_; ++i)
        for (std::int64_t t = row_ptr_[i]; t < row_ptr_[i + 1]; ++t)
            d(i, static_cast<index>(col_idx_[t])) = values_[t];
    return d;
}

}  // namespace qbfac
