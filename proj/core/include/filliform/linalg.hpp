#pragma once

#include <optional>

#include "filliform/int_matrix.hpp"

namespace filliform {

/* Exact determinant by fraction-free (Bareiss) elimination.
 * DomainError on non-square input. */
Int determinant(const IntMatrix& a);

struct Signature {
    std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
    bool operator==(const Signature&) const = default;
};

/* Inertia of a symmetric integer matrix, computed by exact rational
 * congruence diagonalization; no floating point. When every diagonal
 * entry of the live block vanishes but some off-diagonal entry does not,
 * the congruence e_i += e_j creates the pivot 2 a_ij.
 * DomainError on asymmetric input. */
Signature signature(const IntMatrix& a);

/* Some x with a x = b over the rationals, or nullopt when b is not in
 * the column span. Free variables are set to zero, so the output is
 * deterministic. */
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

/* Rank over Q. */
std::size_t rational_rank(const IntMatrix& a);

/* Dense rational matrix helpers for the enumeration kernels. */
using RatMatrix = std::vector<RatVec>;

RatMatrix rat_from_int(const IntMatrix& a);
/* Inverse of a nonsingular square integer matrix, as rationals.
 * DomainError("degenerate", ...) when singular. */
RatMatrix rational_inverse(const IntMatrix& a);

}  // namespace filliform
