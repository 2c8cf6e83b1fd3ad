#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "specpos/field.hpp"

namespace specpos {

/// Dense row-major matrix of exact field elements. All entries share the
/// descriptor; operations are pure.
class Matrix {
  public:
    Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(field)) {}

    static Matrix identity(const FieldDescriptor& field, std::size_t n);

    /// Convenience: build from integer literals row by row.
    static Matrix from_rows(const FieldDescriptor& field,
                            std::initializer_list<std::initializer_list<long long>> rows);

    const FieldDescriptor& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// New matrix whose rows are this matrix's rows followed by other's.
    Matrix stacked_on(const Matrix& other) const;

    Matrix row(std::size_t r) const;
    void set_row(std::size_t r, const Matrix& single_row);

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  private:
    FieldDescriptor field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form: leading entries 1, pivot columns cleared above
/// and below, zero rows at the bottom. The output is the unique canonical
/// representative of the row space, so row-space equality is entrywise
/// equality of RREFs.
RrefResult rref(const Matrix& m);

/// Row rank via forward elimination only (cheaper than full rref).
std::size_t rank(const Matrix& m);

/// True as soon as some row is a combination of the others, i.e.
/// rank < rows; bails out early.
bool rows_dependent(const Matrix& m);

/// Basis of {x : m x = 0} as rows, in RREF. Zero-dimensional kernels give a
/// 0-row matrix.
Matrix nullspace(const Matrix& m);

FieldElement determinant(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);

}  // namespace specpos
