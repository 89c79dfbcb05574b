#include "filliform/quotients.hpp"

#include <algorithm>

#include "filliform/snf.hpp"

namespace filliform {

namespace {

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    return g;
}

Form induced_form(const Form& f, const IntMatrix& basis) {
    return Form(basis.transposed() * f.gram() * basis);
}

}  // namespace

Form nondegenerate_part(const Form& f) {
    if (f.rank() == 0) return f;
    IntMatrix rad = kernel_basis(f.gram());
    if (rad.cols() == 0) return f;
    // a unimodular change of basis sending the radical to the first
    // coordinates; the remaining basis vectors descend to L / radical
    SnfResult snf = smith_normal_form(rad);
    for (std::size_t i = 0; i < snf.d.size(); ++i)
        internal_check(snf.d[i] == 1, "radical is a saturated sublattice");
    IntMatrix uinv = unimodular_inverse(snf.u);
    IntMatrix rest = uinv.column_range(rad.cols(), f.rank());
    Form out = induced_form(f, rest);
    internal_check(determinant(out.gram()) != 0 || out.rank() == 0,
                   "quotient by the radical is nondegenerate");
    return out;
}

Form complement_quotient(const Form& ambient, const IntVec& x) {
    const std::size_t n = ambient.rank();
    require(x.size() == n, "shape-mismatch", "class vector length must equal the rank");
    require(n >= 1, "shape-mismatch", "ambient form must have positive rank");
    require(content(x) == 1, "not-primitive", "the class must be a primitive vector");
    require(ambient.norm(x) == 0, "not-isotropic", "the class must have square zero");

    IntVec gx = ambient.gram().apply(x);
    bool in_radical = std::all_of(gx.begin(), gx.end(), [](const Int& c) { return c == 0; });
    require(!in_radical, "degenerate", "the class pairs trivially with the whole lattice");

    IntMatrix row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = gx[j];
    IntMatrix perp = kernel_basis(row);  // n x (n-1), saturated

    // x lies in its own perp (isotropy); express it there and complete
    RatVec rx(n);
    for (std::size_t i = 0; i < n; ++i) rx[i] = Rational(x[i]);
    auto coeff = solve_rational(perp, rx);
    internal_check(coeff.has_value(), "isotropic class lies in its own perp");
    IntVec c(perp.cols());
    for (std::size_t i = 0; i < perp.cols(); ++i) {
        internal_check(den((*coeff)[i]) == 1, "saturated kernel basis gives integral coords");
        c[i] = num((*coeff)[i]);
    }
    IntMatrix u = complete_to_basis(c);
    IntMatrix basis = perp * u;  // first column is x
    internal_check(basis.col(0) == x, "first basis vector is the class");
    IntMatrix rest = basis.column_range(1, basis.cols());
    return induced_form(ambient, rest);
}

Int adjunction_genus(const Form& lorentz_ambient, const IntVec& c) {
    const std::size_t n = lorentz_ambient.rank();
    require(n >= 1, "not-lorentz", "ambient must be lorentz(k) with k >= 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int expect = (i == j) ? (i == 0 ? Int(1) : Int(-1)) : Int(0);
            require(lorentz_ambient.gram()(i, j) == expect, "not-lorentz",
                    "ambient Gram must be diag(+1, -1, ..., -1)");
        }
    require(c.size() == n, "shape-mismatch", "class vector length must equal the rank");

    IntVec canonical(n, Int(1));
    canonical[0] = -3;  // dual of e_1 + ... + e_k - 3h
    Int kc = lorentz_ambient.pairing(canonical, c);
    Int c2 = lorentz_ambient.norm(c);
    Int twice_genus = kc + c2 + 2;
    require(twice_genus % 2 == 0, "invalid-class", "adjunction output is not an integer");
    Int g = twice_genus / 2;
    require(g >= 0, "invalid-class", "adjunction output is negative");
    return g;
}

namespace {

/* Treat the columns of b as simple roots; returns the two (or, for D4,
 * three) leaves adjacent to the unique branch node of a D_n diagram, or
 * nothing when the graph is not of that shape. */
std::optional<std::vector<std::size_t>> dn_short_legs(const Form& f, const IntMatrix& b) {
    const std::size_t n = b.cols();
    if (n < 4) return std::nullopt;
    Form r = Form(b.transposed() * f.gram() * b);
    for (std::size_t i = 0; i < n; ++i)
        if (r.gram()(i, i) != -2) return std::nullopt;

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int& p = r.gram()(i, j);
            if (p == 0) continue;
            if (p != 1 && p != -1) return std::nullopt;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }

    std::size_t branch = n, leaves_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() == 1) ++leaves_total;
        if (adj[i].size() == 3) {
            if (branch != n) return std::nullopt;  // more than one branch node
            branch = i;
        }
        if (adj[i].size() > 3) return std::nullopt;
    }
    if (branch == n || leaves_total != 3) return std::nullopt;

    std::vector<std::size_t> legs;
    for (std::size_t j : adj[branch])
        if (adj[j].size() == 1) legs.push_back(j);
    if (legs.size() < 2) return std::nullopt;
    return legs;
}

}  // namespace

OverlatticeGlue overlattice_glue(const Form& f, const IntMatrix& root_basis) {
    const std::size_t n = f.rank();
    require(root_basis.rows() == n && root_basis.cols() == n, "infinite-index",
            "a finite-index sublattice needs a square basis matrix of full rank");
    Int det_r = determinant(root_basis);
    require(det_r != 0, "infinite-index", "basis columns are linearly dependent");

    OverlatticeGlue out;
    out.index = abs(det_r);
    require(out.index <= 100000, "index-too-large",
            "refusing to enumerate more than 100000 cosets");

    SnfResult snf = smith_normal_form(root_basis);
    IntMatrix uinv = unimodular_inverse(snf.u);
    RatMatrix binv = rational_inverse(root_basis);

    // L/R = sum Z/d_i via u; lift every nontrivial class through u^{-1}
    std::vector<IntVec> classes;
    classes.emplace_back(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (snf.d[i] <= 1) continue;
        std::vector<IntVec> extended;
        for (const IntVec& c : classes)
            for (Int v = 0; v < snf.d[i]; ++v) {
                IntVec e = c;
                e[i] = v;
                extended.push_back(std::move(e));
            }
        classes = std::move(extended);
    }
    for (const IntVec& c : classes) {
        bool trivial = std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
        if (trivial) continue;
        GlueVector g;
        g.rep = uinv.apply(c);
        g.dual_coords.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += binv[i][j] * Rational(g.rep[j]);
            g.dual_coords[i] = s;
        }
        out.glue.push_back(std::move(g));
    }

    if (out.index == 2) {
        if (auto legs = dn_short_legs(f, root_basis)) {
            out.dn_class = OverlatticeClass::Gamma;
            for (std::size_t a = 0; a < legs->size() && out.dn_class == OverlatticeClass::Gamma;
                 ++a)
                for (std::size_t b = a + 1; b < legs->size(); ++b) {
                    IntVec r1 = root_basis.col((*legs)[a]);
                    IntVec r2 = root_basis.col((*legs)[b]);
                    // membership of (r1 +- r2)/2 in L = Z^n
                    bool sum_in = true, diff_in = true;
                    for (std::size_t i = 0; i < n; ++i) {
                        if ((r1[i] + r2[i]) % 2 != 0) sum_in = false;
                        if ((r1[i] - r2[i]) % 2 != 0) diff_in = false;
                    }
                    if (sum_in || diff_in) {
                        out.dn_class = OverlatticeClass::ZN;
                        break;
                    }
                }
        }
    }
    return out;
}

}  // namespace filliform
