#include <algorithm>

#include "filliform/lattice_ops.hpp"

namespace filliform {

namespace {

/* A = L D L^T for a positive definite rational matrix: d[i] > 0 pivots,
 * mu[i][j] (j > i) the off-diagonal multipliers. */
struct Ldl {
    std::size_t n = 0;
    RatVec d;
    RatMatrix mu;
};

Ldl ldl_decompose(const RatMatrix& a) {
    Ldl out;
    out.n = a.size();
    out.d.assign(out.n, Rational(0));
    out.mu.assign(out.n, RatVec(out.n, Rational(0)));
    for (std::size_t i = 0; i < out.n; ++i) {
        Rational di = a[i][i];
        for (std::size_t k = 0; k < i; ++k) di -= out.d[k] * out.mu[k][i] * out.mu[k][i];
        internal_check(di > 0, "LDL pivot must be positive on definite input");
        out.d[i] = di;
        for (std::size_t j = i + 1; j < out.n; ++j) {
            Rational v = a[i][j];
            for (std::size_t k = 0; k < i; ++k) v -= out.d[k] * out.mu[k][i] * out.mu[k][j];
            out.mu[i][j] = v / di;
        }
    }
    return out;
}

/* Enumerate x in offset + step * Z^n with Q(x) <= radius() against the
 * quadratic form Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
 * Coordinates are fixed from level n-1 down to 0, each level scanning its
 * exact integer range in increasing order, so the visit order is
 * deterministic. radius() is re-read at every level, which lets the
 * shadow search shrink the ball as better covectors are found. */
class CosetEnumerator {
public:
    CosetEnumerator(const Ldl& ldl, IntVec offset, int step)
        : ldl_(ldl), offset_(std::move(offset)), step_(step), x_(ldl.n) {}

    template <typename Radius, typename Visit>
    void run(const Radius& radius, const Visit& visit) {
        if (ldl_.n == 0) {
            visit(x_, Rational(0));
            return;
        }
        descend(ldl_.n, Rational(0), radius, visit);
    }

private:
    template <typename Radius, typename Visit>
    void descend(std::size_t level, const Rational& used, const Radius& radius,
                 const Visit& visit) {
        const std::size_t i = level - 1;
        Rational budget = radius() - used;
        if (budget < 0) return;

        Rational center = 0;  // Gram-Schmidt offset from already-fixed coords
        for (std::size_t j = i + 1; j < ldl_.n; ++j)
            center += ldl_.mu[i][j] * Rational(x_[j]);

        const Rational span = budget / ldl_.d[i];
        Int lo = ceil_minus_sqrt(-center, span);
        Int hi = floor_plus_sqrt(-center, span);
        if (step_ == 2) {
            // snap lo upward onto the parity class of offset_[i]
            if ((lo - offset_[i]) % 2 != 0) ++lo;
        }
        for (Int v = lo; v <= hi; v += step_) {
            x_[i] = v;
            Rational term = Rational(v) + center;
            Rational next_used = used + ldl_.d[i] * term * term;
            if (next_used > radius()) continue;
            if (i == 0)
                visit(x_, next_used);
            else
                descend(i, next_used, radius, visit);
        }
        x_[i] = 0;
    }

    const Ldl& ldl_;
    IntVec offset_;
    int step_;
    IntVec x_;
};

IntVec sign_canonical(const IntVec& v) {
    for (const Int& c : v) {
        if (c > 0) return v;
        if (c < 0) return negated(v);
    }
    return v;
}

}  // namespace

std::vector<ShortVector> short_vectors(const Form& f, const Int& max_abs_norm) {
    require(is_negative_definite(f), "not-negative-definite",
            "short vector enumeration needs a negative definite form");
    std::vector<ShortVector> out;
    if (f.rank() == 0 || max_abs_norm < 0) return out;

    Ldl ldl = ldl_decompose(rat_from_int(f.gram().negated()));
    const Rational radius(max_abs_norm);
    CosetEnumerator enumerator(ldl, IntVec(f.rank(), Int(0)), 1);
    enumerator.run([&] { return radius; }, [&](const IntVec& x, const Rational& q) {
        bool zero = std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
        if (zero) return;
        internal_check(den(q) == 1, "integral form evaluates integrally");
        out.push_back(ShortVector{sign_canonical(x), -num(q)});
    });

    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return abs(a.norm) < abs(b.norm);
        return lex_less(a.coords, b.coords);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ShadowStats shadow(const Form& f) {
    require(is_negative_definite(f), "not-negative-definite",
            "shadow invariants need a negative definite form (the minimum is "
            "ill-posed otherwise)");
    const std::size_t n = f.rank();
    ShadowStats st;
    if (n == 0) {
        st.s = 0;
        st.s_bar = 0;
        return st;
    }

    // |kappa^2| = kappa^T (-gram)^{-1} kappa is positive definite in the
    // dual coordinates, and the characteristic coset is char_base + 2 Z^n.
    RatMatrix inv = rational_inverse(f.gram().negated());
    Ldl ldl = ldl_decompose(inv);
    CharCovector base = char_base(f);

    auto eval = [&](const IntVec& x) {
        Rational q = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q += inv[i][j] * Rational(x[i]) * Rational(x[j]);
        return q;
    };

    // The base covector itself lies in the coset, so the search radius can
    // start at its norm and every minimizer is still visited.
    Rational best = eval(base.coords);
    std::vector<IntVec> minimizers;

    CosetEnumerator enumerator(ldl, base.coords, 2);
    enumerator.run([&] { return best; }, [&](const IntVec& x, const Rational& q) {
        if (q < best) {
            best = q;
            minimizers.clear();
            minimizers.push_back(x);
        } else if (q == best) {
            minimizers.push_back(x);
        }
    });

    internal_check(!minimizers.empty(), "the characteristic coset is nonempty");
    auto least = std::min_element(minimizers.begin(), minimizers.end(),
                                  [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    st.s = best;
    st.s_bar = Rational(n) - best;
    st.witness.coords = *least;
    internal_check(is_characteristic(f, st.witness), "shadow witness must be characteristic");
    return st;
}

}  // namespace filliform
