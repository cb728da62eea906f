#pragma once

#include "pha/poly.hpp"

namespace pha {

/// Dense matrix over Scalar.  Elimination requires numeric (parameter-free)
/// entries, where arithmetic takes place in the field Q(zeta_n).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols, FieldPtr field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    size_t rank() const;

    /// Kernel basis from the reduced row echelon form: one vector per free
    /// column, deterministic.  Vectors satisfy Mv = 0 and are independent.
    std::vector<std::vector<CycRat>> nullspace() const;

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref(std::vector<std::vector<CycRat>>& out) const;

private:
    size_t rows_, cols_;
    FieldPtr field_;
    std::vector<Scalar> data_;
};

/// True iff v lies in the row span of basis (all numeric).
bool in_span(const std::vector<std::vector<CycRat>>& basis, const std::vector<CycRat>& v,
             const FieldPtr& field);

} // namespace pha
