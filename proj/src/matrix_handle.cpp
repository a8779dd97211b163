#include "qbfac/matrix_handle.hpp"

#include <algorithm>
#include <utility>

#include "qbfac/kernels.hpp"

namespace qbfac {

namespace {

DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& x, bool transpose_a) {
    if (!transpose_a) {
        if (a.cols() != x.rows()) throw DimensionError("multiply: inner dimension mismatch");
        return multiply(a, x);
    }
    if (a.rows() != x.rows()) throw DimensionError("multiply: inner dimension mismatch");
    return multiply_at_b(a, x);
}

DenseMatrix sparse_product(const SparseCsrMatrix& a, const DenseMatrix& x, bool transpose_a) {
    const auto& k = kernels::active_kernels();
    if (!transpose_a) {
        if (a.cols() != x.rows()) throw DimensionError("multiply: inner dimension mismatch");
        DenseMatrix y(a.rows(), x.cols());
        kernels::csr_gemm_n(k, y.data(), a.rows(), x.cols(), a.row_ptr().data(),
                            a.col_idx().data(), a.values().data(), x.data(), x.rows());
        return y;
    }
    if (a.rows() != x.rows()) throw DimensionError("multiply: inner dimension mismatch");
    DenseMatrix y(a.cols(), x.cols());
    kernels::csr_gemm_t(y.data(), a.rows(), a.cols(), x.cols(), a.row_ptr().data(),
                        a.col_idx().data(), a.values().data(), x.data());
    return y;
}

class DenseRowStream final : public RowStream {
public:
    DenseRowStream(const DenseMatrix& m, PassCounter& counter)
        : m_(m), counter_(counter) {}

    index rows() const override { return m_.rows(); }
    index cols() const override { return m_.cols(); }

    void next_row(std::span<double> out) override {
        if (next_ >= m_.rows()) throw Error("row stream exhausted");
        if (out.size() != m_.cols()) throw DimensionError("next_row: bad buffer length");
        for (index j = 0; j < m_.cols(); ++j) out[j] = m_(next_, j);
        if (++next_ == m_.rows()) counter_.add(1);
    }

private:
    const DenseMatrix& m_;
    PassCounter& counter_;
    index next_ = 0;
};

class CsrRowStream final : public RowStream {
public:
    CsrRowStream(const SparseCsrMatrix& m, PassCounter& counter)
        : m_(m), counter_(counter) {}

    index rows() const override { return m_.rows(); }
    index cols() const override { return m_.cols(); }

    void next_row(std::span<double> out) override {
        if (next_ >= m_.rows()) throw Error("row stream exhausted");
        if (out.size() != m_.cols()) throw DimensionError("next_row: bad buffer length");
        std::fill(out.begin(), out.end(), 0.0);
        for (std::int64_t t = m_.row_ptr()[next_]; t < m_.row_ptr()[next_ + 1]; ++t)
            out[m_.col_idx()[t]] = m_.values()[t];
        if (++next_ == m_.rows()) counter_.add(1);
    }

private:
    const SparseCsrMatrix& m_;
    PassCounter& counter_;
    index next_ = 0;
};

}  // namespace

MatrixHandle::MatrixHandle(DenseMatrix a) : m_(std::move(a)) {}
MatrixHandle::MatrixHandle(SparseCsrMatrix a) : m_(std::move(a)) {}

index MatrixHandle::rows() const {
    return is_sparse() ? sparse().rows() : dense().rows();
}

index MatrixHandle::cols() const {
    return is_sparse() ? sparse().cols() : dense().cols();
}

const DenseMatrix& MatrixHandle::dense() const {
    if (is_sparse()) throw Error("handle holds a sparse matrix");
    return std::get<DenseMatrix>(m_);
}

const SparseCsrMatrix& MatrixHandle::sparse() const {
    if (!is_sparse()) throw Error("handle holds a dense matrix");
    return std::get<SparseCsrMatrix>(m_);
}

double MatrixHandle::frob_norm_sq() const {
    passes_->add(1);
    const auto& k = kernels::active_kernels();
    if (is_sparse())
        return k.sum_sq(sparse().values().data(), sparse().nnz());
    return k.sum_sq(dense().data(), dense().size());
}

DenseMatrix MatrixHandle::multiply(const DenseMatrix& x, bool transpose_a) const {
    passes_->add(1);
    return is_sparse() ? sparse_product(sparse(), x, transpose_a)
                       : dense_product(dense(), x, transpose_a);
}

DenseMatrix MatrixHandle::multiply_with_norm(const DenseMatrix& x, bool transpose_a,
                                             double& frob_sq_out) const {
    passes_->add(1);
    const auto& k = kernels::active_kernels();
    frob_sq_out = is_sparse() ? k.sum_sq(sparse().values().data(), sparse().nnz())
                              : k.sum_sq(dense().data(), dense().size());
    return is_sparse() ? sparse_product(sparse(), x, transpose_a)
                       : dense_product(dense(), x, transpose_a);
}

std::unique_ptr<RowStream> MatrixHandle::row_stream() const {
    if (is_sparse())
        return std::make_unique<CsrRowStream>(sparse(), *passes_);
    return std::make_unique<DenseRowStream>(dense(), *passes_);
}

void MatrixHandle::for_each_column_block(
    index width, const std::function<void(index, const DenseMatrix&)>& fn) const {
    if (width == 0) throw DimensionError("for_each_column_block: zero width");
    passes_->add(1);
    index n = cols();
    if (is_sparse()) {
        const SparseCsrMatrix& a = sparse();
        for (index j0 = 0; j0 < n; j0 += width) {
            index j1 = std::min(j0 + width, n);
            DenseMatrix block(a.rows(), j1 - j0);
            for (index i = 0; i < a.rows(); ++i)
                for (std::int64_t t = a.row_ptr()[i]; t < a.row_ptr()[i + 1]; ++t) {
                    index c = static_cast<index>(a.col_idx()[t]);
                    if (c >= j0 && c < j1) block(i, c - j0) = a.values()[t];
                }
            fn(j0, block);
        }
        return;
    }
    const DenseMatrix& a = dense();
    for (index j0 = 0; j0 < n; j0 += width) {
        index j1 = std::min(j0 + width, n);
        fn(j0, a.column_range(j0, j1));
    }
}

DenseMatrix MatrixHandle::densify() const {
    try {
        return is_sparse() ? sparse().to_dense() : dense();
    } catch (const std::bad_alloc&) {
        throw ResourceError("densify: out of memory for residual copy");
    }
}

}  // namespace qbfac
