#pragma once

#include "flagkernel/numeric.hpp"

#include <cstddef>
#include <vector>

namespace flagkernel {

/// Dense row-major integer matrix. Zero rows or columns are allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data);
    /// Nested rows; all rows must have equal length.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// d(i, i) for i < min(rows, cols)
    std::vector<BigInt> diagonal() const;
    std::size_t rank() const;
};

/// U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all d_i >= 0.
///
/// Pivoting rule: at step t the pivot is the entry of smallest absolute value in the trailing
/// submatrix (first in row-major order on ties). Rows and columns are reduced by truncated
/// division; leftover remainders become the next pivot. A trailing entry not divisible by the
/// pivot has its row added to the pivot row and the step repeats.
SmithForm smith_normal_form(const IntMatrix& a);

} // namespace flagkernel
