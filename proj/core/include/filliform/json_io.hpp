#pragma once

#include <nlohmann/json.hpp>

#include "filliform/coeff_algebra.hpp"
#include "filliform/ledger.hpp"
#include "filliform/quotients.hpp"
#include "filliform/standard_forms.hpp"
#include "filliform/surgery.hpp"

/* Stable JSON document formats shared by the CLI and the test suites.
 * Integers are emitted as JSON numbers when they fit in 64 bits and as
 * decimal strings otherwise; the parsers accept both. Rationals are
 * always "p" or "p/q" strings so that no value ever rides through a
 * float. Malformed documents raise ParseError (CLI exit code 2). */
namespace filliform::io {

using json = nlohmann::json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);
json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/* {"gram": [[...]]} or
 * {"standard": {"family": "E8"|"A"|"D"|"Gamma"|"cube"|"lorentz",
 *               "rank": k, "sign": -1|+1}}
 * sign -1 (the default) is the constructor output, +1 its negation. */
json form_to_json(const Form& f);
Form form_from_json(const json& j);

json invariants_to_json(const FormInvariants& inv);
json shadow_to_json(const ShadowStats& st);
json roots_to_json(const RootSystemId& id);
json isometry_to_json(const IsometryResult& res);
json minimal_to_json(const MinimalSplit& split);
json glue_to_json(const OverlatticeGlue& g);

/* link: {"matrix": [[...]], "names": [...]?}
 * knot: link keys plus {"ell": [...], "framing": n} */
surgery::FramedLink link_from_json(const json& j);
surgery::KnotInPresentation knot_from_json(const json& j);
json link_to_json(const surgery::FramedLink& l);
json knot_to_json(const surgery::KnotInPresentation& k);
json surgery_manifold_to_json(const surgery::SurgeryManifold& m);
json slope_to_json(const surgery::SlopeData& s);
json cobordism_to_json(const surgery::CobordismHomology& w);

/* {"name", "b1", "torsion", "ud": "p/q", "ud_rev": "p/q", "provenance"} */
json manifold_to_json(const ledger::ManifoldClass& m);
ledger::ManifoldClass manifold_from_json(const json& j);
json verdict_to_json(const ledger::FillingVerdict& v);

/* {"ranks": [{"degree": "p/q", "rank": n}, ...],
 *  "towers": [{"tower": "Tinf"|"Tplus", "bottom": "p/q"}, ...]} */
json graded_to_json(const alg::GradedRankVector& g);
alg::GradedRankVector graded_from_json(const json& j);

/* {"matrix": [["1-t", ...], ...]} with the polynomial grammar of
 * LaurentPoly::parse. */
alg::LaurentMatrix laurent_matrix_from_json(const json& j);
json laurent_factors_to_json(const std::vector<alg::LaurentPoly>& factors);

/* {"ambient": r, "basis": [[...]]}, basis columns generating V. */
alg::Subgroup subgroup_from_json(const json& j);

}  // namespace filliform::io
