#include <algorithm>
#include <map>
#include <numeric>

#include "filliform/lattice_ops.hpp"
#include "filliform/snf.hpp"

namespace filliform {

namespace {

/* root counts of the simply-laced families: A_k has k(k+1), D_k has
 * 2k(k-1), E6/E7/E8 have 72/126/240. */
bool identify_component(std::size_t k, std::size_t count, char& family) {
    if (count == k * (k + 1)) {
        family = 'A';  // covers the D3 = A3 alias
        return true;
    }
    if (k >= 4 && count == 2 * k * (k - 1)) {
        family = 'D';
        return true;
    }
    if ((k == 6 && count == 72) || (k == 7 && count == 126) || (k == 8 && count == 240)) {
        family = 'E';
        return true;
    }
    return false;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RootSystemId root_system(const Form& f) {
    auto vectors = short_vectors(f, 2);
    std::vector<IntVec> roots;
    for (auto& v : vectors)
        if (v.norm == -2) roots.push_back(std::move(v.coords));

    RootSystemId id;
    id.root_count = 2 * roots.size();
    if (roots.empty()) {
        id.spans_full_rank = (f.rank() == 0);
        return id;
    }

    UnionFind uf(roots.size());
    std::vector<IntVec> gram_rows(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) gram_rows[i] = f.gram().apply(roots[i]);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (dot(gram_rows[i], roots[j]) != 0) uf.unite(i, j);

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < roots.size(); ++i) comps[uf.find(i)].push_back(i);

    for (auto& [rep, members] : comps) {
        std::vector<IntVec> cols;
        for (std::size_t i : members) cols.push_back(roots[i]);
        std::size_t k = rational_rank(matrix_from_columns(f.rank(), cols));
        std::size_t count = 2 * members.size();
        RootComponent comp;
        comp.rank = k;
        comp.root_count = count;
        internal_check(identify_component(k, count, comp.family),
                       "roots of a definite lattice form an ADE system");
        id.components.push_back(comp);
    }
    std::sort(id.components.begin(), id.components.end(),
              [](const RootComponent& a, const RootComponent& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return a.family < b.family;
              });

    std::vector<IntVec> all;
    for (const auto& r : roots) all.push_back(r);
    id.spans_full_rank = rational_rank(matrix_from_columns(f.rank(), all)) == f.rank();
    return id;
}

MinimalSplit minimal_part(const Form& f) {
    require(is_negative_definite(f), "not-negative-definite",
            "the <-1> splitting applies to negative definite forms");
    MinimalSplit out;
    out.minimal = f;
    for (;;) {
        auto vecs = short_vectors(out.minimal, 1);
        const ShortVector* unit = nullptr;
        for (const auto& v : vecs)
            if (v.norm == -1) {
                unit = &v;
                break;
            }
        if (!unit) break;
        // split off Z<unit>: the complement is the kernel of the pairing row
        IntMatrix row(1, out.minimal.rank());
        IntVec pair_row = out.minimal.gram().apply(unit->coords);
        for (std::size_t j = 0; j < pair_row.size(); ++j) row(0, j) = pair_row[j];
        IntMatrix comp = kernel_basis(row);
        out.minimal = Form(comp.transposed() * out.minimal.gram() * comp);
        ++out.m;
    }
    return out;
}

namespace {

/* exact rational square root, if it exists */
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Int n = isqrt(num(x)), d = isqrt(den(x));
    if (n * n != num(x) || d * d != den(x)) return std::nullopt;
    return Rational(n, d);
}

class IsometrySearch {
public:
    IsometrySearch(const Form& f, const Form& g) : f_(f), g_(g), n_(f.rank()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        // fill slots by |target norm| ascending so that the roots go first
        // and the single big glue vector of a D/Gamma basis comes last,
        // where it is solved for directly instead of enumerated
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            Int na = abs(g_.gram()(a, a)), nb = abs(g_.gram()(b, b));
            if (na != nb) return na < nb;
            return a < b;
        });
        images_.resize(n_);
        pair_rows_.resize(n_);
    }

    std::optional<IntMatrix> run() {
        if (search(0)) {
            IntMatrix w(n_, n_);
            for (std::size_t s = 0; s < n_; ++s)
                for (std::size_t i = 0; i < n_; ++i) w(i, order_[s]) = images_[s][i];
            internal_check(w.transposed() * f_.gram() * w == g_.gram(),
                           "isometry witness must transport the Gram matrix");
            return w;
        }
        return std::nullopt;
    }

private:
    bool accepts(std::size_t depth, const IntVec& v) const {
        for (std::size_t t = 0; t < depth; ++t)
            if (dot(pair_rows_[t], v) != g_.gram()(order_[t], order_[depth])) return false;
        return true;
    }

    void place(std::size_t depth, IntVec v) {
        pair_rows_[depth] = f_.gram().apply(v);
        images_[depth] = std::move(v);
    }

    bool search(std::size_t depth) {
        if (depth == n_) return true;
        if (depth + 1 == n_ && depth > 0) return solve_last_slot(depth);

        const Int target_norm = g_.gram()(order_[depth], order_[depth]);
        for (const IntVec& v : candidates(abs(target_norm))) {
            if (!accepts(depth, v)) continue;
            place(depth, v);
            if (search(depth + 1)) return true;
        }
        return false;
    }

    /* With n-1 images placed the final image lies on an affine line:
     * the pairing constraints have a rank-(n-1) system, and the norm
     * condition is a rational quadratic along the kernel direction. */
    bool solve_last_slot(std::size_t depth) {
        IntMatrix sys(depth, n_);
        RatVec rhs(depth);
        for (std::size_t t = 0; t < depth; ++t) {
            for (std::size_t j = 0; j < n_; ++j) sys(t, j) = pair_rows_[t][j];
            rhs[t] = Rational(g_.gram()(order_[t], order_[depth]));
        }
        auto particular = solve_rational(sys, rhs);
        if (!particular) return false;
        IntMatrix ker = kernel_basis(sys);
        internal_check(ker.cols() == 1, "placed images must span a corank-1 system");
        IntVec k = ker.col(0);

        // (x0 + t k)^T G (x0 + t k) = target
        RatVec gk(n_), gx0(n_);
        RatVec x0 = *particular;
        for (std::size_t i = 0; i < n_; ++i) {
            Rational sk = 0, sx = 0;
            for (std::size_t j = 0; j < n_; ++j) {
                sk += Rational(f_.gram()(i, j)) * Rational(k[j]);
                sx += Rational(f_.gram()(i, j)) * x0[j];
            }
            gk[i] = sk;
            gx0[i] = sx;
        }
        Rational a = 0, b = 0, c = -Rational(g_.gram()(order_[depth], order_[depth]));
        for (std::size_t i = 0; i < n_; ++i) {
            a += Rational(k[i]) * gk[i];
            b += 2 * x0[i] * gk[i];
            c += x0[i] * gx0[i];
        }
        internal_check(a != 0, "kernel direction has nonzero norm on a definite form");

        auto disc = rational_sqrt(b * b - 4 * a * c);
        if (!disc) return false;
        RatVec roots = {(-b - *disc) / (2 * a), (-b + *disc) / (2 * a)};
        if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);
        for (std::size_t r = 0; r < (*disc == 0 ? std::size_t{1} : std::size_t{2}); ++r) {
            IntVec w(n_);
            bool integral = true;
            for (std::size_t i = 0; i < n_ && integral; ++i) {
                Rational wi = x0[i] + roots[r] * Rational(k[i]);
                if (den(wi) != 1)
                    integral = false;
                else
                    w[i] = num(wi);
            }
            if (!integral) continue;
            place(depth, w);
            return true;
        }
        return false;
    }

    /* Signed candidate vectors of the given |norm|, sorted lexicographically;
     * built lazily so norms that are only ever solved directly never pay for
     * an enumeration. */
    const std::vector<IntVec>& candidates(const Int& abs_norm) {
        auto it = candidates_.find(abs_norm);
        if (it != candidates_.end()) return it->second;
        std::vector<IntVec> list;
        for (const auto& sv : short_vectors(f_, abs_norm)) {
            if (-sv.norm != abs_norm) continue;
            list.push_back(sv.coords);
            list.push_back(negated(sv.coords));
        }
        std::sort(list.begin(), list.end(),
                  [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
        return candidates_.emplace(abs_norm, std::move(list)).first->second;
    }

    const Form& f_;
    const Form& g_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<IntVec> images_;
    std::vector<IntVec> pair_rows_;
    std::map<Int, std::vector<IntVec>> candidates_;
};

std::size_t count_with_norm(const Form& f, const Int& abs_norm) {
    std::size_t c = 0;
    for (const auto& v : short_vectors(f, abs_norm))
        if (-v.norm == abs_norm) ++c;
    return 2 * c;
}

}  // namespace

IsometryResult is_isometric(const Form& f, const Form& g) {
    require(is_negative_definite(f) && is_negative_definite(g), "not-negative-definite",
            "the isometry test enumerates short vectors and needs definite input");
    IsometryResult res;
    if (f.rank() != g.rank()) return res;
    if (f.rank() == 0) {
        res.isometric = true;
        res.witness = IntMatrix(0, 0);
        return res;
    }
    if (determinant(f.gram()) != determinant(g.gram())) return res;
    if (is_even(f) != is_even(g)) return res;
    // norm census up to 2 is cheap and kills most mismatches early
    for (int norm = 1; norm <= 2; ++norm)
        if (count_with_norm(f, norm) != count_with_norm(g, norm)) return res;

    IsometrySearch search(f, g);
    if (auto w = search.run()) {
        res.isometric = true;
        res.witness = std::move(*w);
    }
    return res;
}

}  // namespace filliform
