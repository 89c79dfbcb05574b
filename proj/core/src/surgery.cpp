#include "filliform/surgery.hpp"

#include <algorithm>

#include "filliform/linalg.hpp"

namespace filliform::surgery {

FramedLink::FramedLink(IntMatrix m, std::vector<std::string> n)
    : matrix(std::move(m)), names(std::move(n)) {
    require(matrix.is_symmetric(), "not-symmetric", "a linking matrix must be symmetric");
    require(names.empty() || names.size() == matrix.rows(), "shape-mismatch",
            "one name per link component");
}

KnotInPresentation::KnotInPresentation(FramedLink l, IntVec e, Int f)
    : link(std::move(l)), ell(std::move(e)), framing(std::move(f)) {
    require(ell.size() == link.components(), "shape-mismatch",
            "linking vector length must match the component count");
}

SurgeryManifold homology(const FramedLink& link) {
    CokernelData ck = cokernel(link.matrix);
    SurgeryManifold m;
    m.b1 = ck.free_rank;
    m.torsion_factors = ck.invariant_factors;
    m.torsion_order = ck.torsion_order();
    return m;
}

FramedLink extended_link(const KnotInPresentation& k) {
    const std::size_t n = k.link.components();
    IntMatrix ext(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ext(i, j) = k.link.matrix(i, j);
    for (std::size_t i = 0; i < n; ++i) ext(i, n) = ext(n, i) = k.ell[i];
    ext(n, n) = k.framing;
    std::vector<std::string> names = k.link.names;
    if (!names.empty()) names.push_back("K");
    return FramedLink(std::move(ext), std::move(names));
}

namespace {

/* H_1(M_K) is generated by the meridians mu_1..mu_n, mu_K with one
 * relation per surgered component; the presentation matrix has the
 * relation vectors as columns. */
IntMatrix complement_presentation(const KnotInPresentation& k) {
    const std::size_t n = k.link.components();
    IntMatrix m(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = k.link.matrix(i, j);
        m(n, j) = k.ell[j];
    }
    return m;
}

std::size_t complement_b1(const KnotInPresentation& k) {
    return cokernel(complement_presentation(k)).free_rank;
}

}  // namespace

SlopeData zero_slope(const KnotInPresentation& k) {
    const std::size_t n = k.link.components();
    IntMatrix rel = complement_presentation(k);

    // phi: Z^2 -> H_1(M_K), mu |-> [mu_K], lambda |-> f[mu_K] + sum ell_i [mu_i]
    IntMatrix phi(n + 1, 2);
    phi(n, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) phi(i, 1) = k.ell[i];
    phi(n, 1) = k.framing;

    // ker(phi into the cokernel) = projection of ker[phi | rel] to Z^2
    IntMatrix combined = phi.augmented(rel);
    IntMatrix ker = kernel_basis(combined);
    std::vector<IntVec> projected;
    for (std::size_t j = 0; j < ker.cols(); ++j)
        projected.push_back({ker(0, j), ker(1, j)});
    IntMatrix proj = matrix_from_columns(2, projected);
    SnfResult snf = smith_normal_form(proj);

    std::size_t rank = 0;
    for (const Int& d : snf.d)
        if (d != 0) ++rank;
    internal_check(rank == 1, "the kernel of H_1(T) -> H_1(M_K) has rank one");

    IntMatrix uinv = unimodular_inverse(snf.u);
    IntVec gen = uinv.col(0);  // generator of the image is d_1 * (u^{-1} e_1)

    SlopeData s;
    s.d = snf.d[0];
    s.p = gen[0];
    s.q = gen[1];
    // normalize: mu . lambda_0 = q >= 0; when q = 0, lambda_0 ~ mu and we
    // orient it as +mu
    if (s.q < 0 || (s.q == 0 && s.p < 0)) {
        s.p = -s.p;
        s.q = -s.q;
    }
    s.mu_dot_lambda0 = s.q;
    return s;
}

std::optional<Int> knot_order(const KnotInPresentation& k) {
    // order of sum ell_i [mu_i] in coker(linking matrix)
    SnfResult snf = smith_normal_form(k.link.matrix);
    IntVec e = snf.u.apply(k.ell);
    Int order = 1;
    bool finite = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Int& d = snf.d[i];
        if (d == 0) {
            if (e[i] != 0) finite = false;
        } else if (e[i] % d != 0) {
            order = lcm(order, d / gcd(d, e[i] % d));
        }
    }

    SlopeData s = zero_slope(k);
    if (!finite) {
        internal_check(s.mu_dot_lambda0 == 0, "infinite order must match mu.lambda_0 = 0");
        return std::nullopt;
    }
    internal_check(order == s.d * s.mu_dot_lambda0,
                   "order of [K] must equal d * (mu . lambda_0)");
    return order;
}

int classify(const KnotInPresentation& k) {
    SlopeData s = zero_slope(k);
    int surgery_case;
    if (s.mu_dot_lambda0 == 0)
        surgery_case = 1;
    else if (s.p == 0 && s.q == 1)
        surgery_case = 2;
    else
        surgery_case = 3;

    // consistency: compare b1 of Y with b1 after surgery on K
    std::size_t b1_before = homology(k.link).b1;
    std::size_t b1_after = homology(extended_link(k)).b1;
    bool consistent = (surgery_case == 1 && b1_after + 1 == b1_before) ||
                      (surgery_case == 2 && b1_after == b1_before + 1) ||
                      (surgery_case == 3 && b1_after == b1_before);
    internal_check(consistent, "trichotomy must match the b1 comparison");
    return surgery_case;
}

Rational rational_linking(const KnotInPresentation& k) {
    const std::size_t n = k.link.components();
    // solution-independence guard: ell must pair to zero with ker(matrix)
    IntMatrix ker = kernel_basis(k.link.matrix);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += k.ell[i] * ker(i, j);
        require(s == 0, "infinite-order",
                "rational self-linking is undefined for a knot of infinite order");
    }
    RatVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(k.ell[i]);
    auto x = solve_rational(k.link.matrix, rhs);
    internal_check(x.has_value(), "torsion hypothesis guarantees solvability");
    Rational lk = Rational(k.framing);
    for (std::size_t i = 0; i < n; ++i) lk -= Rational(k.ell[i]) * (*x)[i];
    return lk;
}

CobordismHomology cobordism_b2(const KnotInPresentation& k) {
    CobordismHomology w;
    w.surgery_case = classify(k);
    std::size_t b2_w = complement_b1(k);  // H_2(W) = H_2(M_K) + Z has rank b1(M_K)
    if (w.surgery_case == 3) {
        Rational lk = rational_linking(k);
        internal_check(lk != 0, "a case-3 framing has nonzero rational self-linking");
        if (lk > 0)
            w.b2_plus = 1;
        else
            w.b2_minus = 1;
    }
    internal_check(b2_w >= std::size_t(w.b2_plus + w.b2_minus),
                   "rank bookkeeping for H_2(W)");
    w.b2_zero = b2_w - std::size_t(w.b2_plus + w.b2_minus);
    return w;
}

KnotInPresentation dual_knot(const KnotInPresentation& k) {
    FramedLink ext = extended_link(k);
    IntVec ell(ext.components(), Int(0));
    ell.back() = 1;
    return KnotInPresentation(std::move(ext), std::move(ell), Int(0));
}

}  // namespace filliform::surgery
