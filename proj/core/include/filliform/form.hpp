#pragma once

#include "filliform/linalg.hpp"

namespace filliform {

enum class Parity { Even, Odd };

enum class Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    PositiveSemidefinite,
    NegativeSemidefinite,
    Indefinite,
    Zero,
};

const char* to_string(Parity p);
const char* to_string(Definiteness d);

/* A symmetric integer bilinear form on Z^n, given by its Gram matrix.
 * n = 0 is the empty form: even, determinant 1, the trivial filling
 * candidate. Definite examples throughout the library use the
 * negative-definite sign convention. */
class Form {
public:
    Form() = default;
    explicit Form(IntMatrix gram);

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }

    Int norm(const IntVec& v) const { return sandwich(gram_, v, v); }
    Int pairing(const IntVec& v, const IntVec& w) const { return sandwich(gram_, v, w); }

    Form negated() const { return Form(gram_.negated()); }
    Form direct_sum(const Form& other) const;

    /* Conjugate by a basis change: gram -> g^T gram g. */
    Form transformed(const IntMatrix& g) const;

    bool operator==(const Form&) const = default;

private:
    IntMatrix gram_;
};

struct FormInvariants {
    std::size_t rank = 0;
    Signature sig;
    Int det;
    Parity parity = Parity::Even;
    Definiteness definiteness = Definiteness::Zero;
};

FormInvariants invariants(const Form& f);

bool is_negative_definite(const Form& f);      // vacuously true for rank 0
bool is_negative_semidefinite(const Form& f);  // n_plus == 0
bool is_even(const Form& f);

/* An element of the dual lattice in dual-basis coordinates:
 * kappa(e_j) = coords[j]. Characteristic covectors additionally satisfy
 * coords[j] == gram[j][j] mod 2 for all j. */
struct CharCovector {
    IntVec coords;
    bool operator==(const CharCovector&) const = default;
};

/* The canonical representative with coords[j] = gram[j][j] mod 2 in
 * {0, 1}; the full coset of characteristic covectors is
 * char_base(f) + 2 L^*. */
CharCovector char_base(const Form& f);

bool is_characteristic(const Form& f, const CharCovector& k);

/* S^*(a, b) = a^T gram^{-1} b, the extension of the form to the dual
 * lattice. DomainError("degenerate") on degenerate forms. */
Rational dual_pairing(const Form& f, const IntVec& a, const IntVec& b);

}  // namespace filliform
