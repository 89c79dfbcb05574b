#pragma once

#include "filliform/int_matrix.hpp"

namespace filliform {

/* u * a * v = diag(d) with u, v unimodular. d is canonical: entries
 * nonnegative, d1 | d2 | ..., zeros trailing; length min(rows, cols). */
struct SnfResult {
    IntVec d;
    IntMatrix u, v;
};

SnfResult smith_normal_form(const IntMatrix& a);

/* coker(a: Z^cols -> Z^rows) = Z^free_rank + sum Z/d_i with d_i > 1,
 * divisibility-sorted. */
struct CokernelData {
    std::size_t free_rank = 0;
    IntVec invariant_factors;

    Int torsion_order() const {
        Int t = 1;
        for (const Int& f : invariant_factors) t *= f;
        return t;
    }
    bool operator==(const CokernelData&) const = default;
};

CokernelData cokernel(const IntMatrix& a);

/* Columns form a basis of {x in Z^cols : a x = 0}. The basis spans a
 * saturated sublattice (a direct summand of Z^cols). */
IntMatrix kernel_basis(const IntMatrix& a);

/* Exact inverse of a unimodular matrix; DomainError if |det| != 1. */
IntMatrix unimodular_inverse(const IntMatrix& u);

/* For a primitive column vector c, a unimodular matrix whose first column
 * is c. DomainError if c is not primitive. */
IntMatrix complete_to_basis(const IntVec& c);

}  // namespace filliform
