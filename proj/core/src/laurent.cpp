#include "filliform/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace filliform::alg {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

long LaurentPoly::degree() const {
    internal_check(!is_zero(), "degree of zero polynomial");
    return terms_.rbegin()->first;
}

long LaurentPoly::valuation() const {
    internal_check(!is_zero(), "valuation of zero polynomial");
    return terms_.begin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.terms_[e] += c;
    p.prune();
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) p.terms_[e1 + e2] += c1 * c2;
    p.prune();
    return p;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    const long v = valuation();
    const Rational lead = terms_.rbegin()->second;
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e - v] = c / lead;
    return p;
}

/* Polynomial division after stripping units: with val(a') = val(b') = 0,
 * ordinary division in Q[t] leaves deg r < deg b', hence span r < span b. */
void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                         LaurentPoly& r) {
    internal_check(!b.is_zero(), "division by zero polynomial");
    if (a.is_zero()) {
        q = LaurentPoly();
        r = LaurentPoly();
        return;
    }
    const long va = a.valuation(), vb = b.valuation();
    LaurentPoly rem;  // a shifted to valuation 0
    for (const auto& [e, c] : a.terms_) rem.terms_[e - va] = c;
    LaurentPoly bs;  // b shifted to valuation 0
    for (const auto& [e, c] : b.terms_) bs.terms_[e - vb] = c;

    LaurentPoly quot;
    const long db = bs.degree();
    const Rational lead_b = bs.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= db) {
        long shift = rem.degree() - db;
        Rational f = rem.terms_.rbegin()->second / lead_b;
        LaurentPoly t = monomial(f, shift);
        quot = quot + t;
        rem = rem - t * bs;
    }
    // undo the unit shifts: a = t^va (quot bs + rem) = (t^(va-vb) quot) b + t^va rem
    q = monomial(1, va - vb) * quot;
    r = monomial(1, va) * rem;
}

bool LaurentPoly::divides(const LaurentPoly& other) const {
    if (other.is_zero()) return true;
    if (is_zero()) return false;
    LaurentPoly q, r;
    divmod(other, *this, q, r);
    return r.is_zero();
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        bool unit_coeff = (ac == 1) && e != 0;
        if (!unit_coeff) out += rational_to_string(ac);
        if (e != 0) {
            if (!unit_coeff) out += "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool take(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }
    std::string number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) ++i;
        if (start == i) parse_fail("expected a number in polynomial: " + s);
        return s.substr(start, i - start);
    }
    long integer() {
        bool neg = take('-');
        if (!neg) take('+');
        long v = std::stol(number());
        return neg ? -v : v;
    }
};

}  // namespace

/* grammar:  poly := term (('+'|'-') term)*
 *           term := coeff ['*' var] | var
 *           var  := 't' ['^' int]
 *           coeff := int ['/' int]                                      */
LaurentPoly LaurentPoly::parse(const std::string& s) {
    Parser p(s);
    LaurentPoly out;
    bool first = true;
    for (;;) {
        p.skip_ws();
        if (p.i >= s.size()) break;
        bool neg = false;
        if (p.take('-'))
            neg = true;
        else if (p.take('+'))
            neg = false;
        else if (!first)
            parse_fail("expected '+' or '-' in polynomial: " + s);
        first = false;

        Rational c = 1;
        bool have_coeff = false;
        p.skip_ws();
        if (p.i < s.size() && std::isdigit(static_cast<unsigned char>(s[p.i]))) {
            Int numv(p.number());
            Int denv = 1;
            if (p.take('/')) denv = Int(p.number());
            if (denv == 0) parse_fail("zero denominator in polynomial: " + s);
            c = Rational(numv, denv);
            have_coeff = true;
        }
        long e = 0;
        bool have_var = false;
        if (have_coeff) p.take('*');
        if (p.take('t')) {
            have_var = true;
            e = p.take('^') ? p.integer() : 1;
        }
        if (!have_coeff && !have_var) parse_fail("empty term in polynomial: " + s);
        out = out + monomial(neg ? Rational(-c) : c, e);
    }
    return out;
}

std::vector<LaurentPoly> laurent_snf(const LaurentMatrix& input) {
    LaurentMatrix m = input;
    const std::size_t r = m.rows, c = m.cols, n = std::min(r, c);
    std::vector<LaurentPoly> diag(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c; ++k) std::swap(m(i, k), m(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < r; ++k) std::swap(m(k, i), m(k, j));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: nonzero entry of smallest span in the live block
            std::size_t pi = r, pj = c;
            long best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (m(i, j).is_zero()) continue;
                    long sp = m(i, j).span();
                    if (pi == r || sp < best) {
                        pi = i;
                        pj = j;
                        best = sp;
                    }
                }
            if (pi == r) {
                for (std::size_t k = t; k < n; ++k) diag[k] = LaurentPoly();
                return diag;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r && !dirty; ++i) {
                if (m(i, t).is_zero()) continue;
                LaurentPoly q, rem;
                LaurentPoly::divmod(m(i, t), m(t, t), q, rem);
                for (std::size_t k = t; k < c; ++k) m(i, k) = m(i, k) - q * m(t, k);
                if (!m(i, t).is_zero()) dirty = true;  // smaller remainder became pivot bait
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < c && !dirty; ++j) {
                if (m(t, j).is_zero()) continue;
                LaurentPoly q, rem;
                LaurentPoly::divmod(m(t, j), m(t, t), q, rem);
                for (std::size_t k = t; k < r; ++k) m(k, j) = m(k, j) - q * m(k, t);
                if (!m(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!m(t, t).divides(m(i, j))) {
                        for (std::size_t k = t; k < c; ++k) m(t, k) = m(t, k) + m(i, k);
                        divisible = false;
                        break;
                    }
            if (divisible) {
                diag[t] = m(t, t).normalized();
                break;
            }
        }
    }
    return diag;
}

std::vector<Int> koszul_tor(const LaurentMatrix& m, TorCoefficients coeffs) {
    auto factors = laurent_snf(m);
    std::size_t nonzero = 0;
    for (const auto& f : factors)
        if (!f.is_zero()) ++nonzero;
    require(nonzero == m.cols, "not-a-resolution",
            "the differential of a two-term free resolution must be injective");

    if (coeffs == TorCoefficients::Full) {
        return {Int(m.rows - m.cols), Int(0)};
    }
    Int vanishing = 0;
    for (const auto& f : factors)
        if (!f.is_zero() && f.evaluate_at_one() == 0) ++vanishing;
    Int tor1 = vanishing;
    Int tor0 = Int(m.rows) - Int(m.cols) + vanishing;
    return {tor0, tor1};
}

}  // namespace filliform::alg
