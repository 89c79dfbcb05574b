#pragma once

#include <map>
#include <string>

#include "filliform/numeric.hpp"

namespace filliform::alg {

/* Univariate Laurent polynomial over Q with exact coefficients. The
 * units of Q[t, t^-1] are c t^k; "normalized" means valuation 0 and
 * leading coefficient 1. */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // constant
    static LaurentPoly monomial(const Rational& c, long exp);
    static LaurentPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    long degree() const;     // largest exponent; is_zero() must be false
    long valuation() const;  // smallest exponent
    long span() const { return degree() - valuation(); }  // Euclidean size

    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coeff(long exp) const;
    Rational evaluate_at_one() const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    /* divide by the unit (leading coeff) * t^(valuation) */
    LaurentPoly normalized() const;

    /* a = q * b + r with span(r) < span(b) (or r = 0); b != 0 */
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                       LaurentPoly& r);

    bool divides(const LaurentPoly& other) const;

    /* canonical text form: terms by ascending exponent, e.g. "1-2*t+t^2";
     * the parser accepts the same grammar with rational coefficients. */
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::map<long, Rational> terms_;  // exponent -> nonzero coefficient
    void prune();
};

struct LaurentMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<LaurentPoly> a;

    LaurentMatrix() = default;
    LaurentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/* Diagonal of the Smith form over Q[t, t^-1] (a Euclidean domain with
 * size = span): factors normalized, divisibility-sorted, zeros trailing;
 * length min(rows, cols). */
std::vector<LaurentPoly> laurent_snf(const LaurentMatrix& m);

enum class TorCoefficients { Trivial, Full };

/* Tor ranks of the module presented by the injective differential m of a
 * two-term free resolution 0 -> R^cols -> R^rows -> M -> 0.
 * Trivial coefficients evaluate at t = 1: Tor_1 counts invariant factors
 * vanishing there, Tor_0 is the cokernel dimension. Full coefficients
 * give the free rank of M and Tor_1 = 0. Returns {Tor_0, Tor_1}. */
std::vector<Int> koszul_tor(const LaurentMatrix& m, TorCoefficients coeffs);

}  // namespace filliform::alg
