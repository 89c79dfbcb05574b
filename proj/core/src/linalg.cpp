#include "filliform/linalg.hpp"

#include <algorithm>

namespace filliform {

Int determinant(const IntMatrix& input) {
    require(input.is_square(), "not-square", "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;

    IntMatrix a = input;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                internal_check(t % prev == 0, "Bareiss division must be exact");
                a(i, j) = t / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Signature signature(const IntMatrix& input) {
    require(input.is_symmetric(), "not-symmetric", "signature of an asymmetric matrix");
    const std::size_t n = input.rows();
    RatMatrix a = rat_from_int(input);
    Signature sig;

    auto swap_sym = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    };

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t p = t;
        while (p < n && a[p][p] == 0) ++p;
        if (p == n) {
            // all live diagonal entries vanish: hunt for an off-diagonal one
            std::size_t oi = n, oj = n;
            for (std::size_t i = t; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                sig.n_zero += n - t;
                break;
            }
            // e_i += e_j turns the zero diagonal entry into 2 a_ij
            for (std::size_t k = 0; k < n; ++k) a[oi][k] += a[oj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][oi] += a[k][oj];
            p = oi;
        }
        swap_sym(t, p);

        const Rational d = a[t][t];
        if (d > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            Rational f = a[i][t] / d;
            for (std::size_t j = t + 1; j < n; ++j) a[i][j] -= f * a[t][j];
            a[i][t] = 0;
        }
        for (std::size_t j = t + 1; j < n; ++j) a[t][j] = 0;
        // restore symmetry of the trailing block explicitly
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < i; ++j) a[j][i] = a[i][j];
    }
    internal_check(sig.n_plus + sig.n_minus + sig.n_zero == n, "inertia must sum to rank");
    return sig;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
    internal_check(b.size() == a.rows(), "solve_rational: rhs length mismatch");
    const std::size_t r = a.rows(), c = a.cols();
    RatMatrix m(r, RatVec(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m[i][j] = Rational(a(i, j));
        m[i][c] = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[row], m[p]);
        Rational d = m[row][col];
        for (std::size_t j = col; j <= c; ++j) m[row][j] /= d;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (m[i][c] != 0) return std::nullopt;

    RatVec x(c, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][c];
    return x;
}

std::size_t rational_rank(const IntMatrix& a) {
    RatMatrix m = rat_from_int(a);
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t i = rank + 1; i < r; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < c; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

RatMatrix rat_from_int(const IntMatrix& a) {
    RatMatrix m(a.rows(), RatVec(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
    return m;
}

RatMatrix rational_inverse(const IntMatrix& a) {
    require(a.is_square(), "not-square", "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        require(p < n, "degenerate", "matrix is singular");
        std::swap(m[col], m[p]);
        Rational d = m[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    RatMatrix inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace filliform
