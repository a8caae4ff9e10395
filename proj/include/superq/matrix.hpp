#pragma once

#include <cstdint>
#include <map>

#include "superq/cyclotomic.hpp"

namespace superq {

/// Sorted sparse vector over F, keyed by a flattened row-major index.
using SparseVec = std::vector<std::pair<int64_t, Scalar>>;

/// Row-major sparse matrix over F with exact entries. Row entries are
/// sorted by column and never hold zeros.
class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0), ctx_(nullptr) {}
    SparseMat(const FieldContext& ctx, int rows, int cols)
        : rows_(rows), cols_(cols), ctx_(&ctx), data_(rows) {}

    static SparseMat identity(const FieldContext& ctx, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldContext& ctx() const { return *ctx_; }
    const std::vector<std::pair<int, Scalar>>& row(int i) const { return data_[i]; }

    void set(int i, int j, const Scalar& v);
    void add_to(int i, int j, const Scalar& v);
    Scalar get(int i, int j) const;

    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(const Scalar& c) const;
    bool operator==(const SparseMat& o) const;
    bool operator!=(const SparseMat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    /// Plain Kronecker product (valid for even operators, which is all
    /// this engine places side by side).
    SparseMat kron(const SparseMat& o) const;

    SparseMat pow(int n) const;

    /// Row-major flattening to a sparse vector of length rows*cols.
    SparseVec flatten() const;

    long nnz() const;
    std::string to_string() const;

private:
    int rows_, cols_;
    const FieldContext* ctx_;
    std::vector<std::vector<std::pair<int, Scalar>>> data_;
};

/// Incremental row-echelon span with deterministic pivoting (first nonzero
/// position in flattened row-major order). Pivot rows are normalized to a
/// unit leading coefficient, so membership reduction is exact.
class Echelon {
public:
    /// Reduces v against the current span; inserts the residue as a new
    /// pivot row and returns true when v was independent.
    bool insert(SparseVec v);

    /// Reduction without insertion; returns the residue (empty iff v lies
    /// in the span).
    SparseVec reduce(SparseVec v) const;

    bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
    int rank() const { return (int)pivots_.size(); }

private:
    std::map<int64_t, SparseVec> pivots_;
};

/// v += c * w on sorted sparse vectors.
SparseVec sparse_axpy(const SparseVec& v, const Scalar& c, const SparseVec& w);

} // namespace superq
