#pragma once

#include "filliform/form.hpp"
#include "filliform/int_matrix.hpp"

namespace filliform {

/* The induced nondegenerate form on L / radical. */
Form nondegenerate_part(const Form& f);

/* Q = <x>^perp / <x> for a primitive isotropic x; the input is typically
 * lorentz(k) and the output has rank two less than the ambient.
 * Distinct diagnostics for non-primitive and non-isotropic x. */
Form complement_quotient(const Form& ambient, const IntVec& x);

/* Genus from the adjunction formula in lorentz(k) = CP^2 # k CP^2bar:
 * with K dual to e_1 + ... + e_k - 3h,
 *   g = (<K, C> + C^2 + 2) / 2.
 * Classes with negative or non-integral output are rejected. */
Int adjunction_genus(const Form& lorentz_ambient, const IntVec& c);

/* Glue data of a finite-index sublattice R = root_basis . Z^n inside f's
 * lattice L. Coset representatives of L/R are reported both in L
 * coordinates and in the R-dual coordinates (denominators divide the
 * index). When R carries a simple D_n root basis and the index is 2, the
 * overlattice is classified: Z^n when half the sum of the two short legs
 * of the Dynkin diagram lies in L, Gamma_n otherwise. */
struct GlueVector {
    IntVec rep;           // in L coordinates
    RatVec dual_coords;   // in R^*-coordinates, i.e. root_basis^{-1} rep
};

enum class OverlatticeClass { NotApplicable, ZN, Gamma };

struct OverlatticeGlue {
    Int index = 1;
    std::vector<GlueVector> glue;  // the nontrivial cosets
    OverlatticeClass dn_class = OverlatticeClass::NotApplicable;
};

OverlatticeGlue overlattice_glue(const Form& f, const IntMatrix& root_basis);

}  // namespace filliform
