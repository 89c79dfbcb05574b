#pragma once

#include <optional>
#include <string>

#include "filliform/int_matrix.hpp"
#include "filliform/snf.hpp"

namespace filliform::surgery {

/* Integer surgery presentation: a symmetric linking matrix with the
 * framings on the diagonal. The empty link presents S^3. */
struct FramedLink {
    IntMatrix matrix;
    std::vector<std::string> names;

    FramedLink() = default;
    explicit FramedLink(IntMatrix m, std::vector<std::string> n = {});
    std::size_t components() const { return matrix.rows(); }
};

/* H_1(Y) = Z^b1 + sum Z/d_i, computed as coker of the linking matrix. */
struct SurgeryManifold {
    std::size_t b1 = 0;
    IntVec torsion_factors;  // each > 1, divisibility-sorted
    Int torsion_order = 1;
    bool operator==(const SurgeryManifold&) const = default;
};

SurgeryManifold homology(const FramedLink& link);

/* A knot K in the surgered manifold Y, recorded by its linking numbers
 * with the link components and an integer framing f; the framed
 * longitude is lambda = f mu_K + sum ell_i mu_i in the complement. */
struct KnotInPresentation {
    FramedLink link;
    IntVec ell;
    Int framing = 0;

    KnotInPresentation() = default;
    KnotInPresentation(FramedLink l, IntVec e, Int f);
};

/* The rational longitude: d lambda_0 generates the kernel of
 * H_1(T) -> H_1(M_K) with lambda_0 = p mu + q lambda primitive. The
 * intersection convention is mu . lambda = +1, so mu . lambda_0 = q;
 * the orientation is normalized to mu . lambda_0 >= 0, and to p > 0 in
 * the degenerate case lambda_0 ~ mu. */
struct SlopeData {
    Int d = 1;
    Int p = 0, q = 1;
    Int mu_dot_lambda0 = 1;
    bool operator==(const SlopeData&) const = default;
};

SlopeData zero_slope(const KnotInPresentation& k);

/* Order of [K] in H_1(Y); nullopt encodes infinite order. Cross-checked
 * against d * (mu . lambda_0) from zero_slope. */
std::optional<Int> knot_order(const KnotInPresentation& k);

/* The surgery trichotomy:
 *   case 1: mu ~ lambda_0 (K of infinite order; b1 drops by 1),
 *   case 2: lambda ~ lambda_0 (b1 rises by 1),
 *   case 3: neither (b1 unchanged).
 * Verified internally against the b1 comparison between the linking
 * matrix and its extension by K. */
int classify(const KnotInPresentation& k);

/* Betti numbers of the surgery cobordism W(K): cases 1 and 2 are
 * intersection-trivial, case 3 contributes a single +- class whose sign
 * is the sign of the rational linking number. */
struct CobordismHomology {
    int surgery_case = 0;
    int b2_plus = 0, b2_minus = 0;
    std::size_t b2_zero = 0;
    bool operator==(const CobordismHomology&) const = default;
};

CobordismHomology cobordism_b2(const KnotInPresentation& k);

/* lk_Q(K, lambda) = f - ell^T x with (linking matrix) x = ell; defined
 * exactly when [K] is torsion in H_1(Y). */
Rational rational_linking(const KnotInPresentation& k);

/* The dual knot in the surgered manifold: extend the linking matrix by
 * K's row, and take the meridian of the new component with framing 0. */
KnotInPresentation dual_knot(const KnotInPresentation& k);

/* Y with surgery on K performed, i.e. the extended linking matrix. */
FramedLink extended_link(const KnotInPresentation& k);

}  // namespace filliform::surgery
