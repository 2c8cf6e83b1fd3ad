#include "specpos/matrix.hpp"

#include <utility>

namespace specpos {

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) fail(ErrorCode::InvalidInput, "ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = FieldElement::from_integer(field, v);
        ++i;
    }
    return m;
}

Matrix Matrix::stacked_on(const Matrix& other) const {
    if (!(field_ == other.field_) || cols_ != other.cols_)
        fail(ErrorCode::InvalidInput, "stacking matrices with mismatched shape or field");
    Matrix out(field_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

Matrix Matrix::row(std::size_t r) const {
    Matrix out(field_, 1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.at(0, j) = at(r, j);
    return out;
}

void Matrix::set_row(std::size_t r, const Matrix& single_row) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = single_row.at(0, j);
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != rhs.entries_[i]) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t piv = pr;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != pr)
            for (std::size_t j = c; j < cols; ++j) std::swap(a.at(pr, j), a.at(piv, j));
        const FieldElement inv = a.at(pr, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(pr, j) = a.at(pr, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || a.at(i, c).is_zero()) continue;
            const FieldElement f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t piv = pr;
        while (piv < rows && a.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != pr)
            for (std::size_t j = c; j < cols; ++j) std::swap(a.at(pr, j), a.at(piv, j));
        const FieldElement inv = a.at(pr, c).inverse();
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const FieldElement f = a.at(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(pr, j);
        }
        ++pr;
    }
    return pr;
}

bool rows_dependent(const Matrix& m) {
    if (m.rows() > m.cols()) return true;
    return rank(m) < m.rows();
}

Matrix nullspace(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix basis(m.field(), free_cols.size(), cols);
    for (std::size_t v = 0; v < free_cols.size(); ++v) {
        const std::size_t f = free_cols[v];
        basis.at(v, f) = FieldElement::one(m.field());
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.at(v, r.pivot_cols[i]) = -r.matrix.at(i, f);
    }
    return rref(basis).matrix;
}

FieldElement determinant(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    FieldElement det = FieldElement::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) return FieldElement::zero(m.field());
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            det = -det;
        }
        det = det * a.at(c, c);
        const FieldElement inv = a.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const FieldElement f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(c, j);
        }
    }
    return det;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()) || a.cols() != b.rows())
        fail(ErrorCode::InvalidInput, "matrix product shape mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            if (a.at(i, t).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + a.at(i, t) * b.at(t, j);
        }
    return out;
}

}  // namespace specpos
