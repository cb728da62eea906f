#include "pha/matrix.hpp"

namespace pha {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)),
      data_(rows * cols, Scalar::zero(field_)) {}

std::vector<size_t> ExactMatrix::rref(std::vector<std::vector<CycRat>>& out) const {
    out.assign(rows_, std::vector<CycRat>(cols_, CycRat::zero(field_)));
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            const Scalar& s = at(r, c);
            if (!s.is_numeric())
                throw pha_error("elimination requires numeric entries");
            if (!s.is_zero()) out[r][c] = s.numeric();
        }
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // first nonzero pivot in this column
        size_t p = row;
        while (p < rows_ && out[p][col].is_zero()) ++p;
        if (p == rows_) continue;
        std::swap(out[p], out[row]);
        CycRat inv = out[row][col].inverse();
        for (size_t c = col; c < cols_; ++c) out[row][c] = out[row][c] * inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row || out[r][col].is_zero()) continue;
            CycRat f = out[r][col];
            for (size_t c = col; c < cols_; ++c)
                out[r][c] = out[r][c] - f * out[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t ExactMatrix::rank() const {
    std::vector<std::vector<CycRat>> R;
    return rref(R).size();
}

std::vector<std::vector<CycRat>> ExactMatrix::nullspace() const {
    std::vector<std::vector<CycRat>> R;
    std::vector<size_t> pivots = rref(R);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycRat>> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycRat> v(cols_, CycRat::zero(field_));
        v[f] = CycRat::one(field_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<CycRat>>& basis, const std::vector<CycRat>& v,
             const FieldPtr& field) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    size_t cols = basis[0].size();
    ExactMatrix with(basis.size() + 1, cols, field);
    ExactMatrix without(basis.size(), cols, field);
    for (size_t r = 0; r < basis.size(); ++r)
        for (size_t c = 0; c < cols; ++c) {
            with.at(r, c) = Scalar(basis[r][c]);
            without.at(r, c) = Scalar(basis[r][c]);
        }
    for (size_t c = 0; c < cols; ++c) with.at(basis.size(), c) = Scalar(v[c]);
    return with.rank() == without.rank();
}

} // namespace pha
