#pragma once

#include <cstddef>
#include <initializer_list>

#include "filliform/numeric.hpp"

namespace filliform {

/* Dense row-major matrix over arbitrary-precision integers. The 0x0
 * matrix is a legitimate value (empty Gram matrices, empty linking
 * matrices) and every algorithm below must accept it. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;
    IntMatrix negated() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec apply(const IntVec& v) const;  // this * v

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    /* row(i) += c * row(j), col(i) += c * col(j) */
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    /* [this | rhs] side by side; row counts must agree. */
    IntMatrix augmented(const IntMatrix& rhs) const;
    /* Columns [first, last) as a new matrix. */
    IntMatrix column_range(std::size_t first, std::size_t last) const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix matrix_from_columns(std::size_t rows, const std::vector<IntVec>& cols);

/* v^T a w for a square matrix a. */
Int sandwich(const IntMatrix& a, const IntVec& v, const IntVec& w);

}  // namespace filliform
