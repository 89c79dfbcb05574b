#pragma once

#include <optional>

#include "filliform/form.hpp"

namespace filliform {

/* A nonzero lattice vector together with its value under the form.
 * Vectors come in +- pairs; the stored representative has positive first
 * nonzero coordinate, and the mirror vector is implied. */
struct ShortVector {
    IntVec coords;
    Int norm;
    bool operator==(const ShortVector&) const = default;
};

/* All v != 0 with |f(v, v)| <= max_abs_norm, one representative per
 * +- pair, sorted by (|norm|, lexicographic coords). Requires f negative
 * definite; pruned Fincke-Pohst enumeration with exact rational bounds. */
std::vector<ShortVector> short_vectors(const Form& f, const Int& max_abs_norm);

/* Shadow invariants of a negative-definite form:
 *   s = min |kappa^2| over the characteristic coset char_base + 2 L^*,
 *   s_bar = rank - s.
 * The witness is the lexicographically least minimizer. */
struct ShadowStats {
    Rational s;
    Rational s_bar;
    CharCovector witness;
};

ShadowStats shadow(const Form& f);

struct RootComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    std::size_t rank = 0;
    std::size_t root_count = 0;  // counting both signs
    bool operator==(const RootComponent&) const = default;
};

/* Connected components of the norm-(-2) root graph, identified by
 * (span rank, root count); D3 is reported as A3 and D2 cannot occur as a
 * single component. */
struct RootSystemId {
    std::vector<RootComponent> components;  // sorted by (rank, family)
    std::size_t root_count = 0;
    bool spans_full_rank = false;
};

RootSystemId root_system(const Form& f);

/* Unique splitting f = <-1>^m + minimal, where the minimal part contains
 * no vectors of norm -1. */
struct MinimalSplit {
    std::size_t m = 0;
    Form minimal;
};

MinimalSplit minimal_part(const Form& f);

/* Backtracking isometry test over short-vector images. When isometric,
 * witness satisfies witness^T gram(f) witness = gram(g). Both forms must
 * be negative definite (enumeration-based; intended for rank <= ~16). */
struct IsometryResult {
    bool isometric = false;
    std::optional<IntMatrix> witness;
};

IsometryResult is_isometric(const Form& f, const Form& g);

}  // namespace filliform
