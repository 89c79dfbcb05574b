#include "filliform/int_matrix.hpp"

#include <algorithm>

namespace filliform {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        internal_check(r.size() == cols_, "ragged initializer");
        for (long long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    internal_check(cols_ == rhs.rows_, "matrix product shape mismatch");
    IntMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += x * rhs(k, j);
        }
    return m;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    internal_check(v.size() == cols_, "matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntMatrix IntMatrix::augmented(const IntMatrix& rhs) const {
    internal_check(rows_ == rhs.rows_, "augmented: row count mismatch");
    IntMatrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, cols_ + j) = rhs(i, j);
    }
    return m;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t last) const {
    internal_check(first <= last && last <= cols_, "column_range out of bounds");
    IntMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
}

IntMatrix matrix_from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        internal_check(cols[j].size() == rows, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Int sandwich(const IntMatrix& a, const IntVec& v, const IntVec& w) {
    return dot(v, a.apply(w));
}

}  // namespace filliform
