#include "filliform/ledger.hpp"

#include <algorithm>

#include "filliform/quotients.hpp"

namespace filliform::ledger {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::PaperTable: return "paper-table";
        case Provenance::Sum: return "sum";
        case Provenance::User: return "user";
    }
    return "?";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "paper-table") return Provenance::PaperTable;
    if (s == "sum") return Provenance::Sum;
    if (s == "user") return Provenance::User;
    parse_fail("unknown provenance '" + s + "'");
}

ManifoldClass builtin(const std::string& name, std::optional<std::size_t> genus) {
    const Rational half(1, 2);
    ManifoldClass m;
    m.provenance = Provenance::PaperTable;
    if (name == "S3") {
        m = {name, 0, 1, 0, 0, Provenance::PaperTable};
    } else if (name == "S1xS2") {
        m = {name, 1, 1, -half, -half, Provenance::PaperTable};
    } else if (name == "T3") {
        m = {name, 3, 1, half, half, Provenance::PaperTable};
    } else if (name == "poincare" || name == "P") {
        m = {"poincare", 0, 1, -2, 2, Provenance::PaperTable};
    } else if (name == "SigmaxS1") {
        require(genus.has_value(), "missing-genus", "SigmaxS1 needs a genus");
        std::size_t g = *genus;
        Rational ud = (g % 2 == 1) ? half : -half;
        m = {"SigmaxS1(" + std::to_string(g) + ")", 2 * g + 1, 1, ud, ud,
             Provenance::PaperTable};
    } else {
        fail("unknown-manifold", "no built-in manifold named '" + name + "'");
    }
    return m;
}

ManifoldClass connected_sum(const std::vector<ManifoldClass>& parts) {
    ManifoldClass sum = builtin("S3");
    sum.provenance = Provenance::Sum;
    if (parts.empty()) return sum;
    std::string name;
    for (const auto& p : parts) {
        sum.b1 += p.b1;
        sum.torsion_order *= p.torsion_order;
        sum.ud += p.ud;
        sum.ud_rev += p.ud_rev;
        if (!name.empty()) name += "#";
        name += p.name;
    }
    sum.name = name;
    return sum;
}

ManifoldClass reverse(const ManifoldClass& m) {
    ManifoldClass r = m;
    std::swap(r.ud, r.ud_rev);
    r.name = "-" + m.name;
    return r;
}

Rational delta(const ManifoldClass& m) { return 4 * m.ud + 2 * Rational(m.b1); }

Rational delta_reversed(const ManifoldClass& m) { return 4 * m.ud_rev + 2 * Rational(m.b1); }

FillingVerdict check_filling(const ManifoldClass& m, const Form& f) {
    FillingVerdict v;
    if (!is_negative_semidefinite(f)) {
        v.admissible = false;
        v.reason = "not semidefinite";
        return v;
    }
    Form core = nondegenerate_part(f);
    ShadowStats sh = shadow(core);
    v.margin = delta(m) - sh.s_bar;
    Int det = abs(determinant(core.gram()));

    if (v.margin < 0) {
        v.admissible = false;
        v.violating_covector = sh.witness;
        v.reason = "shadow bound exceeded";
        return v;
    }
    if (det > m.torsion_order) {
        v.admissible = false;
        v.reason = "determinant exceeds torsion order";
        return v;
    }
    v.admissible = true;
    return v;
}

std::vector<Form> enumerate_even_candidates(const ManifoldClass& m,
                                            const EnumerationOptions& opts) {
    std::vector<Form> out;
    Rational dlt = delta(m);
    if (dlt >= 0) out.push_back(Form());  // the trivial filling candidate

    if (dlt < 1) return out;
    std::size_t rank_cap = std::min<std::size_t>(
        opts.max_rank, static_cast<std::size_t>(rational_floor(dlt)));

    for (std::size_t r = 1; r <= rank_cap; ++r) {
        for (Form& cand : enumerate_even_definite_forms(r, m.torsion_order, opts.progress)) {
            if (!check_filling(m, cand).admissible) continue;
            bool fresh = true;
            for (const Form& seen : out)
                if (seen.rank() == cand.rank() && is_isometric(seen, cand).isometric) {
                    fresh = false;
                    break;
                }
            if (fresh) out.push_back(std::move(cand));
        }
    }
    return out;
}

EmbeddingRange embedding_range(const ManifoldClass& y0, const ManifoldClass& p) {
    require(p.b1 == 0, "bad-summand", "the repeated summand must have b1 = 0");
    require(den(p.ud) == 1, "bad-summand", "the repeated summand needs an integer d");
    Int d = num(p.ud);
    require(d < 0, "bad-summand", "the repeated summand needs d < 0");
    require(d % 2 == 0, "bad-summand",
            "an integer homology sphere has an even correction term");

    Rational four_d = Rational(4 * d);
    EmbeddingRange r;
    r.n_min = rational_ceil(delta_reversed(y0) / four_d);
    r.n_max = rational_floor(-delta(y0) / four_d);
    return r;
}

}  // namespace filliform::ledger
