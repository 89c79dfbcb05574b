#include "filliform/snf.hpp"

#include <algorithm>

#include "filliform/linalg.hpp"

namespace filliform {

namespace {

/* Smallest nonzero |entry| of the trailing submatrix starting at (t, t);
 * gcd-reduction pivoting keeps intermediate entries small. */
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t r = a.rows(), c = a.cols(), n = std::min(r, c);
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    // Row op a <- E a is mirrored as u <- E u; column op a <- a F as v <- v F.
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Int q = floor_div(a(i, t), a(t, t));
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) {
                    // Remainder is smaller than the pivot; restart on it.
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Int q = floor_div(a(t, j), a(t, t));
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;

            // Pivot divides its row and column; enforce divisibility of the
            // rest of the submatrix before moving on.
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult res;
    res.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.d[i] = a(i, i);
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

CokernelData cokernel(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    CokernelData out;
    std::size_t nonzero = 0;
    for (const Int& d : snf.d) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.invariant_factors.push_back(d);
    }
    out.free_rank = a.rows() - nonzero;
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j < n && snf.d[j] != 0) continue;
        cols.push_back(snf.v.col(j));
    }
    return matrix_from_columns(a.cols(), cols);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    require(m.is_square(), "not-unimodular", "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Int det = determinant(m);
    require(det == 1 || det == -1, "not-unimodular", "matrix determinant is not +-1");
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = 1;
        auto x = solve_rational(m, e);
        internal_check(x.has_value(), "unimodular matrix must be invertible");
        for (std::size_t i = 0; i < n; ++i) {
            internal_check(den((*x)[i]) == 1, "unimodular inverse must be integral");
            inv(i, j) = num((*x)[i]);
        }
    }
    return inv;
}

IntMatrix complete_to_basis(const IntVec& c) {
    const std::size_t n = c.size();
    internal_check(n > 0, "complete_to_basis of empty vector");
    IntMatrix col = matrix_from_columns(n, {c});
    SnfResult snf = smith_normal_form(col);
    require(snf.d[0] == 1, "not-primitive", "vector is not primitive");
    // u * c * v = e_1 with v = (+-1); the first column of u^{-1} * v^{-1} is c.
    IntMatrix b = unimodular_inverse(snf.u);
    if (snf.v(0, 0) == -1) b.negate_col(0);
    internal_check(b.col(0) == c, "basis completion must start with c");
    return b;
}

}  // namespace filliform
