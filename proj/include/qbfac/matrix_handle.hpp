#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <variant>

#include "qbfac/dense_matrix.hpp"
#include "qbfac/sparse_csr.hpp"
#include "qbfac/types.hpp"

namespace qbfac {

/// Counts full sweeps over the wrapped matrix. One application of A or A^T to
/// a block is one pass regardless of block width; overwriting an explicit
/// residual is two (read + write); a Frobenius-norm evaluation is one.
/// Atomic so concurrent products on one handle account correctly.
class PassCounter {
public:
    void add(std::int64_t k) { passes_.fetch_add(k, std::memory_order_relaxed); }
    std::int64_t value() const { return passes_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::int64_t> passes_{0};
};

/// Yields the rows of a matrix exactly once, in order.
class RowStream {
public:
    virtual ~RowStream() = default;
    virtual index rows() const = 0;
    virtual index cols() const = 0;
    /// Fills `out` (length cols()) with the next row.
    virtual void next_row(std::span<double> out) = 0;
};

/// Input matrix for the factorization algorithms: dense or CSR storage plus
/// the pass counter that instruments every access.
class MatrixHandle {
public:
    explicit MatrixHandle(DenseMatrix a);
    explicit MatrixHandle(SparseCsrMatrix a);

    MatrixHandle(const MatrixHandle&) = delete;
    MatrixHandle& operator=(const MatrixHandle&) = delete;
    MatrixHandle(MatrixHandle&&) = default;
    MatrixHandle& operator=(MatrixHandle&&) = default;

    index rows() const;
    index cols() const;
    bool is_sparse() const { return std::holds_alternative<SparseCsrMatrix>(m_); }
    const DenseMatrix& dense() const;
    const SparseCsrMatrix& sparse() const;

    /// Sum of squared entries. One pass.
    double frob_norm_sq() const;

    /// A*X (or A^T*X). One pass.
    DenseMatrix multiply(const DenseMatrix& x, bool transpose_a) const;

    /// Same product, and the sum of A's squared entries comes along for free:
    /// both are produced by the same logical sweep, as a row stream would.
    DenseMatrix multiply_with_norm(const DenseMatrix& x, bool transpose_a,
                                   double& frob_sq_out) const;

    /// Row view consumed exactly once; counts one pass on exhaustion.
    /// The stream references the handle, which must outlive it.
    std::unique_ptr<RowStream> row_stream() const;

    /// Visits [j0, j1) column blocks of width <= `width`. One pass total.
    void for_each_column_block(
        index width, const std::function<void(index j0, const DenseMatrix&)>& fn) const;

    /// Dense copy for algorithms that maintain an explicit residual.
    /// Not counted; the residual's own sweeps are what the accounting tracks.
    DenseMatrix densify() const;

    PassCounter& pass_counter() const { return *passes_; }
    std::int64_t passes() const { return passes_->value(); }

private:
    std::variant<DenseMatrix, SparseCsrMatrix> m_;
    std::unique_ptr<PassCounter> passes_ = std::make_unique<PassCounter>();
};

}  // namespace qbfac
