#include "filliform/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace filliform {

Int floor_div(const Int& a, const Int& b) {
    internal_check(b != 0, "floor_div by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    internal_check(b != 0, "ceil_div by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int rational_floor(const Rational& r) { return floor_div(num(r), den(r)); }

Int rational_ceil(const Rational& r) { return ceil_div(num(r), den(r)); }

Int isqrt(const Int& n) {
    internal_check(n >= 0, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

/* floor(sqrt(p/q)) = floor(isqrt(p*q)/q) for p, q >= 0. */
static Int floor_sqrt_rational(const Rational& x) {
    internal_check(x >= 0, "floor_sqrt_rational of negative");
    return isqrt(num(x) * den(x)) / den(x);
}

Int floor_plus_sqrt(const Rational& c, const Rational& b) {
    internal_check(b >= 0, "floor_plus_sqrt with negative bound");
    // c + sqrt(b) lies in [floor(c) + floor(sqrt b), floor(c) + floor(sqrt b) + 2)
    Int m = rational_floor(c) + floor_sqrt_rational(b) + 1;
    Rational diff = Rational(m) - c;
    if (diff > 0 && diff * diff > b) --m;
    return m;
}

Int ceil_minus_sqrt(const Rational& c, const Rational& b) {
    return -floor_plus_sqrt(-c, b);
}

std::string rational_to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) parse_fail("rational with zero denominator: " + s);
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        parse_fail("malformed rational: " + s);
    }
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int dot(const IntVec& a, const IntVec& b) {
    internal_check(a.size() == b.size(), "dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
    internal_check(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    internal_check(a.size() == b.size(), "lex_less: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

IntVec negated(const IntVec& v) {
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

}  // namespace filliform
