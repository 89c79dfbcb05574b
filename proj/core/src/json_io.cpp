#include "filliform/json_io.hpp"

#include <limits>

namespace filliform::io {

namespace {

const json& expect_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing key '") + key + "' in document");
    return j.at(key);
}

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) parse_fail(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

}  // namespace

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
            parse_fail("malformed integer string: " + j.get<std::string>());
        }
    }
    parse_fail("expected an integer (number or decimal string)");
}

json intvec_to_json(const IntVec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) parse_fail("expected an array of integers");
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) parse_fail("expected an array-of-arrays matrix");
    const std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            parse_fail("ragged matrix rows in document");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j.at(i).at(k));
    }
    return m;
}

json rational_to_json(const Rational& r) { return json(rational_to_string(r)); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    parse_fail("expected a rational as a \"p/q\" string");
}

json form_to_json(const Form& f) { return json{{"gram", matrix_to_json(f.gram())}}; }

Form form_from_json(const json& j) {
    if (j.contains("standard")) {
        const json& s = j.at("standard");
        StandardFamily fam = family_from_string(expect_string(expect_key(s, "family"), "family"));
        std::size_t rank = 0;
        if (s.contains("rank")) {
            Int r = int_from_json(s.at("rank"));
            if (r < 0) parse_fail("standard form rank must be nonnegative");
            rank = static_cast<std::size_t>(r);
        }
        Form f = standard_form(fam, rank);
        if (s.contains("sign")) {
            Int sign = int_from_json(s.at("sign"));
            if (sign != 1 && sign != -1) parse_fail("sign must be -1 or +1");
            if (sign == 1) f = f.negated();
        }
        return f;
    }
    IntMatrix gram = matrix_from_json(expect_key(j, "gram"));
    if (!gram.is_symmetric()) parse_fail("Gram matrix must be symmetric");
    return Form(std::move(gram));
}

json invariants_to_json(const FormInvariants& inv) {
    return json{
        {"rank", inv.rank},
        {"signature", json::array({inv.sig.n_plus, inv.sig.n_minus, inv.sig.n_zero})},
        {"det", int_to_json(inv.det)},
        {"parity", to_string(inv.parity)},
        {"definiteness", to_string(inv.definiteness)},
    };
}

json shadow_to_json(const ShadowStats& st) {
    return json{
        {"s", rational_to_json(st.s)},
        {"s_bar", rational_to_json(st.s_bar)},
        {"witness", intvec_to_json(st.witness.coords)},
    };
}

json roots_to_json(const RootSystemId& id) {
    json comps = json::array();
    for (const auto& c : id.components)
        comps.push_back(json{{"family", std::string(1, c.family)},
                             {"rank", c.rank},
                             {"roots", c.root_count}});
    return json{{"components", std::move(comps)},
                {"root_count", id.root_count},
                {"spans_full_rank", id.spans_full_rank}};
}

json isometry_to_json(const IsometryResult& res) {
    json j{{"isometric", res.isometric}};
    if (res.witness) j["witness"] = matrix_to_json(*res.witness);
    return j;
}

json minimal_to_json(const MinimalSplit& split) {
    return json{{"m", split.m}, {"minimal", form_to_json(split.minimal)}};
}

json glue_to_json(const OverlatticeGlue& g) {
    json vecs = json::array();
    for (const auto& v : g.glue) {
        json dual = json::array();
        for (const auto& c : v.dual_coords) dual.push_back(rational_to_json(c));
        vecs.push_back(json{{"rep", intvec_to_json(v.rep)}, {"dual_coords", std::move(dual)}});
    }
    const char* cls = g.dn_class == OverlatticeClass::ZN      ? "Zn"
                      : g.dn_class == OverlatticeClass::Gamma ? "Gamma"
                                                              : "not-applicable";
    return json{{"index", int_to_json(g.index)}, {"glue", std::move(vecs)}, {"class", cls}};
}

surgery::FramedLink link_from_json(const json& j) {
    IntMatrix m = matrix_from_json(expect_key(j, "matrix"));
    if (!m.is_symmetric()) parse_fail("linking matrix must be symmetric");
    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& n : j.at("names")) names.push_back(expect_string(n, "component name"));
        if (names.size() != m.rows()) parse_fail("one name per link component");
    }
    return surgery::FramedLink(std::move(m), std::move(names));
}

surgery::KnotInPresentation knot_from_json(const json& j) {
    surgery::FramedLink link = link_from_json(j);
    IntVec ell = intvec_from_json(expect_key(j, "ell"));
    if (ell.size() != link.components()) parse_fail("ell length must match the component count");
    Int framing = int_from_json(expect_key(j, "framing"));
    return surgery::KnotInPresentation(std::move(link), std::move(ell), std::move(framing));
}

json link_to_json(const surgery::FramedLink& l) {
    json j{{"matrix", matrix_to_json(l.matrix)}};
    if (!l.names.empty()) j["names"] = l.names;
    return j;
}

json knot_to_json(const surgery::KnotInPresentation& k) {
    json j = link_to_json(k.link);
    j["ell"] = intvec_to_json(k.ell);
    j["framing"] = int_to_json(k.framing);
    return j;
}

json surgery_manifold_to_json(const surgery::SurgeryManifold& m) {
    return json{{"b1", m.b1}, {"torsion", intvec_to_json(m.torsion_factors)}};
}

json slope_to_json(const surgery::SlopeData& s) {
    return json{
        {"d", int_to_json(s.d)},
        {"lambda0", json::array({int_to_json(s.p), int_to_json(s.q)})},
        {"mu_dot_lambda0", int_to_json(s.mu_dot_lambda0)},
    };
}

json cobordism_to_json(const surgery::CobordismHomology& w) {
    return json{
        {"case", w.surgery_case},
        {"b2_plus", w.b2_plus},
        {"b2_minus", w.b2_minus},
        {"b2_zero", w.b2_zero},
    };
}

json manifold_to_json(const ledger::ManifoldClass& m) {
    return json{
        {"name", m.name},
        {"b1", m.b1},
        {"torsion", int_to_json(m.torsion_order)},
        {"ud", rational_to_json(m.ud)},
        {"ud_rev", rational_to_json(m.ud_rev)},
        {"provenance", ledger::to_string(m.provenance)},
    };
}

ledger::ManifoldClass manifold_from_json(const json& j) {
    ledger::ManifoldClass m;
    m.name = expect_string(expect_key(j, "name"), "name");
    Int b1 = int_from_json(expect_key(j, "b1"));
    if (b1 < 0) parse_fail("b1 must be nonnegative");
    m.b1 = static_cast<std::size_t>(b1);
    m.torsion_order = int_from_json(expect_key(j, "torsion"));
    if (m.torsion_order < 1) parse_fail("torsion order must be positive");
    m.ud = rational_from_json(expect_key(j, "ud"));
    m.ud_rev = rational_from_json(expect_key(j, "ud_rev"));
    if (j.contains("provenance"))
        m.provenance =
            ledger::provenance_from_string(expect_string(j.at("provenance"), "provenance"));
    return m;
}

json verdict_to_json(const ledger::FillingVerdict& v) {
    json j{{"admissible", v.admissible}, {"margin", rational_to_json(v.margin)}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.violating_covector) j["violating_covector"] = intvec_to_json(v.violating_covector->coords);
    return j;
}

json graded_to_json(const alg::GradedRankVector& g) {
    json ranks = json::array();
    for (const auto& [d, r] : g.ranks)
        ranks.push_back(json{{"degree", rational_to_json(d)}, {"rank", int_to_json(r)}});
    json towers = json::array();
    for (const auto& [d, tag] : g.towers)
        towers.push_back(json{{"tower", tag == alg::TowerTag::Tinf ? "Tinf" : "Tplus"},
                              {"bottom", rational_to_json(d)}});
    return json{{"ranks", std::move(ranks)}, {"towers", std::move(towers)}};
}

alg::GradedRankVector graded_from_json(const json& j) {
    alg::GradedRankVector g;
    if (j.contains("ranks"))
        for (const auto& e : j.at("ranks")) {
            Int r = int_from_json(expect_key(e, "rank"));
            if (r <= 0) parse_fail("graded ranks must be positive");
            g.add_rank(rational_from_json(expect_key(e, "degree")), r);
        }
    if (j.contains("towers"))
        for (const auto& e : j.at("towers")) {
            std::string tag = expect_string(expect_key(e, "tower"), "tower tag");
            if (tag != "Tinf" && tag != "Tplus") parse_fail("tower tag must be Tinf or Tplus");
            g.add_tower(rational_from_json(expect_key(e, "bottom")),
                        tag == "Tinf" ? alg::TowerTag::Tinf : alg::TowerTag::Tplus);
        }
    g.normalize();
    return g;
}

alg::LaurentMatrix laurent_matrix_from_json(const json& j) {
    const json& rows = expect_key(j, "matrix");
    if (!rows.is_array()) parse_fail("expected an array-of-arrays matrix of polynomials");
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.at(0).size() : 0;
    alg::LaurentMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows.at(i).is_array() || rows.at(i).size() != c)
            parse_fail("ragged matrix rows in polynomial document");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = alg::LaurentPoly::parse(expect_string(rows.at(i).at(k), "polynomial"));
    }
    return m;
}

json laurent_factors_to_json(const std::vector<alg::LaurentPoly>& factors) {
    json arr = json::array();
    for (const auto& f : factors) arr.push_back(f.str());
    return json{{"factors", std::move(arr)}};
}

alg::Subgroup subgroup_from_json(const json& j) {
    Int ambient = int_from_json(expect_key(j, "ambient"));
    if (ambient < 0) parse_fail("ambient rank must be nonnegative");
    IntMatrix basis = matrix_from_json(expect_key(j, "basis"));
    return alg::Subgroup(static_cast<std::size_t>(ambient), std::move(basis));
}

}  // namespace filliform::io
