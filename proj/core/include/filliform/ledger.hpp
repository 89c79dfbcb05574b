#pragma once

#include <optional>
#include <string>

#include "filliform/lattice_ops.hpp"

namespace filliform::ledger {

enum class Provenance { PaperTable, Sum, User };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/* Correction-term ledger entry for a closed oriented 3-manifold with a
 * torsion spin-c structure: first Betti number, order of the torsion
 * subgroup of H_1, and the twisted correction terms of both orientations
 * (ud for Y, ud_rev for -Y). delta(Y) = 4 ud + 2 b1. */
struct ManifoldClass {
    std::string name;
    std::size_t b1 = 0;
    Int torsion_order = 1;
    Rational ud = 0;
    Rational ud_rev = 0;
    Provenance provenance = Provenance::User;
};

/* Built-in entries.
 *   S3          (0, 1, 0, 0)
 *   S1xS2       (1, 1, -1/2, -1/2)
 *   T3          (3, 1, +1/2, +1/2)
 *   SigmaxS1    genus g: b1 = 2g+1, ud = +1/2 for g odd, -1/2 for g even
 *   poincare/P  (0, 1, -2, +2)
 * The SigmaxS1 values are the unique assignment consistent with
 * delta(Sigma_g x S1) = 8 ceil(g/2), with the g = 0, 1, 2 entries above,
 * and with delta = 4 ud + 2 b1 (see README).
 * Sigma_g x S1 and the g-independent entries carry orientation-reversing
 * diffeomorphisms, so ud_rev = ud there. */
ManifoldClass builtin(const std::string& name, std::optional<std::size_t> genus = {});

ManifoldClass connected_sum(const std::vector<ManifoldClass>& parts);

ManifoldClass reverse(const ManifoldClass& m);

Rational delta(const ManifoldClass& m);           // 4 ud + 2 b1
Rational delta_reversed(const ManifoldClass& m);  // 4 ud_rev + 2 b1

/* Verdict of the filling bound: a negative-semidefinite form is
 * admissible iff s_bar(nondegenerate part) <= delta(Y) and
 * |det| <= torsion order. margin = delta - s_bar; when the shadow bound
 * fails, the covector attaining s is reported as the violator. */
struct FillingVerdict {
    bool admissible = false;
    std::optional<CharCovector> violating_covector;
    Rational margin = 0;
    std::string reason;  // empty when admissible
};

FillingVerdict check_filling(const ManifoldClass& m, const Form& f);

struct EnumerationOptions {
    std::size_t max_rank = 8;  // runtime guard; delta may allow more
    bool progress = false;     // report search progress on stderr
};

/* All even negative-definite forms admissible as filling intersection
 * forms for m, up to isometry: rank <= delta(Y), |det| <= torsion order.
 * The rank-0 form is included whenever it is admissible. Backtracking
 * over reduced Gram matrices; see gram_enum.cpp. */
std::vector<Form> enumerate_even_candidates(const ManifoldClass& m,
                                            const EnumerationOptions& opts = {});

/* The closed interval [ceil(delta(-Y0)/4d), floor(-delta(Y0)/4d)] of
 * multiplicities n for which Y0 # nP is not obstructed from separating
 * embeddings into negative-definite 4-manifolds; outside it the
 * embedding is obstructed. Requires b1(P) = 0 and d = ud(P) a negative
 * even integer. */
struct EmbeddingRange {
    Int n_min, n_max;  // may be empty (n_min > n_max)
};

EmbeddingRange embedding_range(const ManifoldClass& y0, const ManifoldClass& p);

}  // namespace filliform::ledger

namespace filliform {

/* Enumerate positive-definite even Gram matrices of the given rank with
 * 1 <= det <= max_det, up to isometry, by backtracking over
 * Minkowski-reduced matrices. Used by the ledger enumeration; returns
 * negative-definite forms. */
std::vector<Form> enumerate_even_definite_forms(std::size_t rank, const Int& max_det,
                                                bool progress);

}  // namespace filliform
