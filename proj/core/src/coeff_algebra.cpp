#include "filliform/coeff_algebra.hpp"

#include <algorithm>
#include <bit>

#include "filliform/linalg.hpp"
#include "filliform/snf.hpp"

namespace filliform::alg {

Subgroup::Subgroup(std::size_t ambient, IntMatrix b) : ambient_rank(ambient), basis(std::move(b)) {
    require(basis.rows() == ambient_rank || basis.cols() == 0, "shape-mismatch",
            "basis rows must equal the ambient rank");
    require(rational_rank(basis) == basis.cols(), "dependent-basis",
            "subgroup basis columns must be independent over Q");
}

bool is_direct_summand(const Subgroup& v) {
    SnfResult snf = smith_normal_form(v.basis);
    for (const Int& d : snf.d)
        if (d != 1) return false;
    return true;
}

Subgroup perp(const Subgroup& v, const IntMatrix& pairing) {
    require(pairing.is_square() && pairing.rows() == v.ambient_rank, "shape-mismatch",
            "pairing must be square of the ambient rank");
    Int det = determinant(pairing);
    require(det == 1 || det == -1, "not-unimodular", "the pairing must be unimodular");
    // x in V^perp iff (basis^T pairing) x = 0
    IntMatrix constraints = v.basis.transposed() * pairing;
    IntMatrix ker = kernel_basis(constraints);
    Subgroup out(v.ambient_rank, ker);
    internal_check(out.rank() + v.rank() == v.ambient_rank,
                   "unimodular pairing gives complementary ranks");
    return out;
}

std::vector<Int> tor_ranks_shapiro(std::size_t ambient_rank, const Subgroup& v) {
    require(v.ambient_rank == ambient_rank, "shape-mismatch",
            "subgroup ambient rank disagrees with the stated rank");
    require(is_direct_summand(v), "not-a-summand",
            "the Shapiro reduction needs a direct summand");
    const std::size_t k = v.rank();
    std::vector<Int> ranks(k + 1);
    Int binom = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        ranks[i] = binom;
        binom = binom * Int(k - i) / Int(i + 1);
    }
    return ranks;
}

void GradedRankVector::add_rank(const Rational& degree, const Int& rank) {
    if (rank == 0) return;
    ranks[degree] += rank;
    if (ranks[degree] == 0) ranks.erase(degree);
}

void GradedRankVector::add_tower(const Rational& bottom, TowerTag tag) {
    towers.emplace_back(bottom, tag);
}

void GradedRankVector::normalize() {
    for (auto it = ranks.begin(); it != ranks.end();)
        it = (it->second == 0) ? ranks.erase(it) : std::next(it);
    std::sort(towers.begin(), towers.end());
}

std::optional<Rational> GradedRankVector::min_degree() const {
    std::optional<Rational> best;
    if (!ranks.empty()) best = ranks.begin()->first;
    for (const auto& [d, tag] : towers)
        if (!best || d < *best) best = d;
    return best;
}

GradedRankVector kunneth_s1s2(const GradedRankVector& g, std::size_t n) {
    GradedRankVector out;
    IntVec binom(n + 1);
    binom[0] = 1;
    for (std::size_t j = 0; j + 1 <= n; ++j) binom[j + 1] = binom[j] * Int(n - j) / Int(j + 1);

    const Rational half(1, 2);
    for (const auto& [d, r] : g.ranks)
        for (std::size_t j = 0; j <= n; ++j)
            out.add_rank(d - Rational(n) * half + Rational(j), r * binom[j]);
    for (const auto& [d, tag] : g.towers)
        for (std::size_t j = 0; j <= n; ++j) {
            Rational shifted = d - Rational(n) * half + Rational(j);
            for (Int c = 0; c < binom[j]; ++c) out.add_tower(shifted, tag);
        }
    out.normalize();
    return out;
}

ExteriorElement ExteriorElement::basis_monomial(std::size_t rank, unsigned mask) {
    ExteriorElement e(rank);
    e.coeffs_[mask] = 1;
    return e;
}

Rational ExteriorElement::coeff(unsigned mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void ExteriorElement::set(unsigned mask, const Rational& c) {
    if (c == 0)
        coeffs_.erase(mask);
    else
        coeffs_[mask] = c;
}

void ExteriorElement::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
    internal_check(rank_ == o.rank_, "exterior rank mismatch");
    ExteriorElement e = *this;
    for (const auto& [m, c] : o.coeffs_) e.coeffs_[m] += c;
    e.prune();
    return e;
}

ExteriorElement ExteriorElement::scaled(const Rational& c) const {
    ExteriorElement e(rank_);
    if (c == 0) return e;
    for (const auto& [m, v] : coeffs_) e.coeffs_[m] = v * c;
    return e;
}

namespace {

/* sign of merging two disjoint index sets: (-1)^{inversions} */
int shuffle_sign(unsigned a, unsigned b) {
    int sign = 1;
    for (unsigned bits = b; bits; bits &= bits - 1) {
        unsigned lowest = bits & ~(bits - 1);
        unsigned higher_in_a = a & ~(lowest | (lowest - 1));
        if (std::popcount(higher_in_a) % 2 != 0) sign = -sign;
    }
    return sign;
}

}  // namespace

ExteriorElement ExteriorElement::wedge(const ExteriorElement& o) const {
    internal_check(rank_ == o.rank_, "exterior rank mismatch");
    ExteriorElement e(rank_);
    for (const auto& [m1, c1] : coeffs_)
        for (const auto& [m2, c2] : o.coeffs_) {
            if (m1 & m2) continue;
            e.coeffs_[m1 | m2] += Rational(shuffle_sign(m1, m2)) * c1 * c2;
        }
    e.prune();
    return e;
}

ExteriorElement contract(const RatVec& xi, const ExteriorElement& w) {
    require(xi.size() == w.rank(), "shape-mismatch",
            "covector length must equal the exterior rank");
    ExteriorElement out(w.rank());
    for (const auto& [mask, c] : w.coeffs()) {
        int sign = 1;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            unsigned bit = 1u << i;
            if (!(mask & bit)) continue;
            if (xi[i] != 0) {
                unsigned reduced = mask & ~bit;
                out.set(reduced, out.coeff(reduced) + Rational(sign) * xi[i] * c);
            }
            sign = -sign;
        }
    }
    return out;
}

std::vector<Int> kernel_of_full_contraction(std::size_t k) {
    require(k <= 8, "rank-too-large", "exterior algebra dimension 2^k exceeds the desk scale");
    const std::size_t dim = std::size_t{1} << k;
    // stack the k contraction operators and compute the rational kernel
    IntMatrix stacked(k * dim, dim);
    for (std::size_t op = 0; op < k; ++op) {
        RatVec xi(k, Rational(0));
        xi[op] = 1;
        for (unsigned col = 0; col < dim; ++col) {
            ExteriorElement image =
                contract(xi, ExteriorElement::basis_monomial(k, col));
            for (const auto& [m, c] : image.coeffs()) {
                internal_check(den(c) == 1, "coordinate contraction is integral");
                stacked(op * dim + m, col) = num(c);
            }
        }
    }
    IntMatrix ker = kernel_basis(stacked);

    std::vector<Int> profile(k + 1, Int(0));
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        // each kernel basis vector must be supported in a single degree
        int deg = -1;
        for (unsigned m = 0; m < dim; ++m) {
            if (ker(m, j) == 0) continue;
            int d = std::popcount(m);
            internal_check(deg == -1 || deg == d, "joint kernel is graded");
            deg = d;
        }
        internal_check(deg >= 0, "kernel basis vector is nonzero");
        profile[static_cast<std::size_t>(deg)] += 1;
    }
    return profile;
}

}  // namespace filliform::alg
