#pragma once

#include <cstddef>
#include <vector>

#include "gorenstein/field.hpp"

namespace gorenstein {

/// Dense row-major matrix over one exact field.
class ExactMatrix {
public:
    ExactMatrix(Field f, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(Field f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transpose() const;
    /// Submatrix on the given row and column index lists.
    ExactMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// Exact rank. Fraction-free (Bareiss) elimination over Q, Gaussian over F_p.
std::size_t rank(const ExactMatrix& m);

/// Exact determinant of a square matrix; throws InputError otherwise.
Scalar determinant(const ExactMatrix& m);

/// Inverse of a square matrix; throws InputError if singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Basis of the right null space {v : M v = 0}, one vector per free column
/// of the reduced row echelon form.
std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m);

/// Pivot columns of the reduced row echelon form, ascending.
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);

/// Rows chosen greedily top to bottom, keeping each row that is independent
/// of the rows already kept.
std::vector<std::size_t> greedy_independent_rows(const ExactMatrix& m);

}  // namespace gorenstein
