#include "filliform/form.hpp"

namespace filliform {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "positive-definite";
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::PositiveSemidefinite: return "positive-semidefinite";
        case Definiteness::NegativeSemidefinite: return "negative-semidefinite";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::Zero: return "zero";
    }
    return "?";
}

Form::Form(IntMatrix gram) : gram_(std::move(gram)) {
    require(gram_.is_symmetric(), "not-symmetric", "a Gram matrix must be symmetric");
}

Form Form::direct_sum(const Form& other) const {
    const std::size_t n = rank(), m = other.rank();
    IntMatrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = other.gram_(i, j);
    return Form(std::move(g));
}

Form Form::transformed(const IntMatrix& g) const {
    internal_check(g.rows() == rank(), "basis change shape mismatch");
    return Form(g.transposed() * gram_ * g);
}

FormInvariants invariants(const Form& f) {
    FormInvariants inv;
    inv.rank = f.rank();
    inv.sig = signature(f.gram());
    inv.det = determinant(f.gram());
    inv.parity = Parity::Even;
    for (std::size_t i = 0; i < f.rank(); ++i)
        if (f.gram()(i, i) % 2 != 0) {
            inv.parity = Parity::Odd;
            break;
        }

    const auto& s = inv.sig;
    if (s.n_plus == 0 && s.n_minus == 0)
        inv.definiteness = Definiteness::Zero;
    else if (s.n_minus == 0 && s.n_zero == 0)
        inv.definiteness = Definiteness::PositiveDefinite;
    else if (s.n_plus == 0 && s.n_zero == 0)
        inv.definiteness = Definiteness::NegativeDefinite;
    else if (s.n_minus == 0)
        inv.definiteness = Definiteness::PositiveSemidefinite;
    else if (s.n_plus == 0)
        inv.definiteness = Definiteness::NegativeSemidefinite;
    else
        inv.definiteness = Definiteness::Indefinite;
    return inv;
}

bool is_negative_definite(const Form& f) {
    Signature s = signature(f.gram());
    return s.n_plus == 0 && s.n_zero == 0;
}

bool is_negative_semidefinite(const Form& f) {
    return signature(f.gram()).n_plus == 0;
}

bool is_even(const Form& f) {
    for (std::size_t i = 0; i < f.rank(); ++i)
        if (f.gram()(i, i) % 2 != 0) return false;
    return true;
}

CharCovector char_base(const Form& f) {
    CharCovector k;
    k.coords.resize(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i)
        k.coords[i] = (f.gram()(i, i) % 2 == 0) ? 0 : 1;
    return k;
}

bool is_characteristic(const Form& f, const CharCovector& k) {
    if (k.coords.size() != f.rank()) return false;
    for (std::size_t i = 0; i < f.rank(); ++i)
        if ((k.coords[i] - f.gram()(i, i)) % 2 != 0) return false;
    return true;
}

Rational dual_pairing(const Form& f, const IntVec& a, const IntVec& b) {
    require(a.size() == f.rank() && b.size() == f.rank(), "shape-mismatch",
            "dual vector length must equal the rank");
    if (f.rank() == 0) return 0;
    require(determinant(f.gram()) != 0, "degenerate",
            "dual pairing needs a nondegenerate form");
    RatVec rb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rb[i] = Rational(b[i]);
    auto x = solve_rational(f.gram(), rb);
    internal_check(x.has_value(), "nondegenerate system must be solvable");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * (*x)[i];
    return s;
}

}  // namespace filliform
