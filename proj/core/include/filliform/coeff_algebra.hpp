#pragma once

#include <map>

#include "filliform/int_matrix.hpp"
#include "filliform/laurent.hpp"

namespace filliform::alg {

/* A subgroup V of Z^r given by a basis matrix whose columns generate it;
 * columns must be independent over Q. */
struct Subgroup {
    std::size_t ambient_rank = 0;
    IntMatrix basis;  // ambient_rank x rank(V)

    Subgroup() = default;
    Subgroup(std::size_t ambient, IntMatrix b);
    std::size_t rank() const { return basis.cols(); }
};

/* True iff V is a primitive sublattice: every invariant factor of the
 * basis is 1. */
bool is_direct_summand(const Subgroup& v);

/* V^perp = {x : pairing(x, v) = 0 for all v in V} for a unimodular
 * pairing; rank(V) + rank(V^perp) = ambient rank. */
Subgroup perp(const Subgroup& v, const IntMatrix& pairing);

/* Tor_i over the group ring of Z^ambient of the induced module attached
 * to a direct summand V: Shapiro reduces this to the exterior algebra of
 * V, so the ranks are the binomial row C(rank V, i). */
std::vector<Int> tor_ranks_shapiro(std::size_t ambient_rank, const Subgroup& v);

/* Finitely supported ranks over rational degrees, plus symbolic infinite
 * towers marked by their bottom degree. Degrees live in (1/4) Z. */
enum class TowerTag { Tinf, Tplus };

struct GradedRankVector {
    std::map<Rational, Int> ranks;                     // degree -> rank > 0
    std::vector<std::pair<Rational, TowerTag>> towers;  // sorted by (degree, tag)

    void add_rank(const Rational& degree, const Int& rank);
    void add_tower(const Rational& bottom, TowerTag tag);
    void normalize();
    std::optional<Rational> min_degree() const;  // over ranks and towers
    bool operator==(const GradedRankVector&) const = default;
};

/* Connected sum with n copies of S^1 x S^2 at the rank level: tensor with
 * (shift +1/2 + shift -1/2)^n, a binomial convolution; every tower and
 * rank entry spreads over degrees d - n/2, d - n/2 + 1, ..., d + n/2. */
GradedRankVector kunneth_s1s2(const GradedRankVector& g, std::size_t n);

/* Element of the exterior algebra Lambda^* Z^n over Q, indexed by subset
 * bitmasks. */
class ExteriorElement {
public:
    ExteriorElement() = default;
    explicit ExteriorElement(std::size_t rank) : rank_(rank) {}
    static ExteriorElement basis_monomial(std::size_t rank, unsigned mask);

    std::size_t rank() const { return rank_; }
    const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned mask) const;
    void set(unsigned mask, const Rational& c);

    ExteriorElement operator+(const ExteriorElement&) const;
    ExteriorElement scaled(const Rational&) const;
    ExteriorElement wedge(const ExteriorElement&) const;
    bool operator==(const ExteriorElement&) const = default;

private:
    std::size_t rank_ = 0;
    std::map<unsigned, Rational> coeffs_;
    void prune();
};

/* Interior product against a covector xi on V; drops degree by one and
 * squares to zero. */
ExteriorElement contract(const RatVec& xi, const ExteriorElement& w);

/* Degree profile of the joint kernel of all coordinate contractions on
 * Lambda^* Z^k, computed by exact linear algebra on the 2^k-dimensional
 * algebra; the answer is the degree-0 line [1, 0, ..., 0]. */
std::vector<Int> kernel_of_full_contraction(std::size_t k);

}  // namespace filliform::alg
