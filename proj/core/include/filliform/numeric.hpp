#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "filliform/errors.hpp"

namespace filliform {

/* All arithmetic in this library is exact. Integers are arbitrary
 * precision, rationals are kept in canonical reduced form with a positive
 * denominator (both guaranteed by the backing types). */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

Int floor_div(const Int& a, const Int& b);  // b != 0
Int ceil_div(const Int& a, const Int& b);   // b != 0

Int rational_floor(const Rational& r);
Int rational_ceil(const Rational& r);

/* floor(sqrt(n)) for n >= 0. */
Int isqrt(const Int& n);

/* Largest integer m with m <= c + sqrt(b), and smallest m with
 * m >= c - sqrt(b); both require b >= 0. Used by the lattice point
 * enumeration to turn rational radius bounds into exact integer ranges. */
Int floor_plus_sqrt(const Rational& c, const Rational& b);
Int ceil_minus_sqrt(const Rational& c, const Rational& b);

/* Rationals print as "p" or "p/q" (q > 1); parsing accepts both forms. */
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Int dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const RatVec& b);

/* Lexicographic comparison used wherever a deterministic order on
 * coordinate vectors is required. */
bool lex_less(const IntVec& a, const IntVec& b);

IntVec negated(const IntVec& v);

}  // namespace filliform
