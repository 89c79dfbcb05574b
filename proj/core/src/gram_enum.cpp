#include <iostream>

#include "filliform/ledger.hpp"

namespace filliform {

namespace {

/* Backtracking search over even positive-definite Gram matrices in
 * Minkowski-reduced position:
 *   - diagonal even, ascending,
 *   - 2 |g_ij| <= g_ii for i < j (pair condition),
 *   - |b_k + s b_i + t b_j|^2 >= g_kk for i < j < k, s, t = +-1
 *     (triple condition),
 *   - prod g_ii <= (4/3)^{n(n-1)/2} det (Minkowski's inequality), with
 *     det <= max_det and the unchosen diagonal entries >= 2,
 *   - per-column sign canonicalization: the first nonzero off-diagonal
 *     entry of every column is positive.
 * Every isometry class with det in [1, max_det] contains at least one
 * matrix satisfying all of the above, so collecting the leaves (without
 * deduplication, which the caller owns) is a complete enumeration.
 * Positive definiteness is maintained incrementally through the rational
 * LDL pivots, which also prunes a column as soon as its partial
 * Gram-Schmidt mass reaches g_kk. */
class GramSearch {
public:
    GramSearch(std::size_t n, const Int& max_det, bool progress)
        : n_(n), max_det_(max_det), progress_(progress), g_(n, n), mu_(n, RatVec(n)), d_(n) {
        Int num = 1, den = 1;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                num *= 4;
                den *= 3;
            }
        product_bound_ = Rational(num, den) * Rational(max_det);
    }

    std::vector<Form> run() {
        if (n_ == 0) return {};
        choose_diagonal(0, Int(1));
        if (progress_) report(true);
        return std::move(results_);
    }

private:
    void choose_diagonal(std::size_t k, const Int& diag_prod) {
        if (k == n_) {
            Rational det = 1;
            for (std::size_t i = 0; i < n_; ++i) det *= d_[i];
            internal_check(den(det) == 1, "integer Gram matrices have integer determinants");
            Int idet = num(det);
            if (idet >= 1 && idet <= max_det_) results_.emplace_back(g_.negated());
            return;
        }
        Int lo = (k == 0) ? Int(2) : g_(k - 1, k - 1);
        Int remaining_min = 1;
        for (std::size_t i = k + 1; i < n_; ++i) remaining_min *= 2;
        for (Int v = lo; Rational(diag_prod * v * remaining_min) <= product_bound_; v += 2) {
            g_(k, k) = v;
            fill_column(k, 0, Rational(0), diag_prod * v);
        }
    }

    void fill_column(std::size_t k, std::size_t i, const Rational& partial,
                     const Int& diag_prod) {
        if (++nodes_ % (1 << 22) == 0 && progress_) report(false);
        if (i == k) {
            Rational dk = Rational(g_(k, k)) - partial;
            if (dk <= 0) return;
            d_[k] = dk;
            choose_diagonal(k + 1, diag_prod);
            return;
        }
        Int lim = g_(i, i) / 2;
        bool prefix_zero = true;
        for (std::size_t j = 0; j < i; ++j)
            if (g_(j, k) != 0) {
                prefix_zero = false;
                break;
            }
        for (Int v = prefix_zero ? Int(0) : -lim; v <= lim; ++v) {
            if (!triples_ok(k, i, v)) continue;
            g_(i, k) = v;
            g_(k, i) = v;
            // mu_ik and the partial Gram-Schmidt mass of column k
            Rational m = Rational(v);
            for (std::size_t j = 0; j < i; ++j) m -= d_[j] * mu_[j][i] * mu_[j][k];
            m /= d_[i];
            mu_[i][k] = m;
            Rational next = partial + d_[i] * m * m;
            if (next >= g_(k, k)) continue;
            fill_column(k, i + 1, next, diag_prod);
        }
        g_(i, k) = 0;
        g_(k, i) = 0;
    }

    bool triples_ok(std::size_t k, std::size_t i, const Int& v) const {
        // |b_k + s b_i + t b_j|^2 >= g_kk for every j < i and signs s, t
        for (std::size_t j = 0; j < i; ++j) {
            const Int& a = g_(j, i);
            const Int& b = g_(j, k);
            Int base = g_(i, i) + g_(j, j);
            for (int s = -1; s <= 1; s += 2)
                for (int t = -1; t <= 1; t += 2)
                    if (base + 2 * (s * v + t * b + s * t * a) < 0) return false;
        }
        return true;
    }

    void report(bool final) const {
        std::cerr << "gram-enum: rank " << n_ << ", nodes " << nodes_ << ", forms "
                  << results_.size() << (final ? " (done)\n" : "\n");
    }

    std::size_t n_;
    Int max_det_;
    bool progress_;
    IntMatrix g_;
    RatMatrix mu_;
    RatVec d_;
    Rational product_bound_;
    std::vector<Form> results_;
    mutable unsigned long long nodes_ = 0;
};

}  // namespace

std::vector<Form> enumerate_even_definite_forms(std::size_t rank, const Int& max_det,
                                                bool progress) {
    GramSearch search(rank, max_det, progress);
    return search.run();
}

}  // namespace filliform
