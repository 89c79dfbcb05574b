#include "filliform/standard_forms.hpp"

namespace filliform {

StandardFamily family_from_string(const std::string& name) {
    if (name == "A") return StandardFamily::A;
    if (name == "D") return StandardFamily::D;
    if (name == "E8") return StandardFamily::E8;
    if (name == "Gamma") return StandardFamily::Gamma;
    if (name == "cube") return StandardFamily::Cube;
    if (name == "lorentz") return StandardFamily::Lorentz;
    fail("unknown-family", "no standard form family named '" + name + "'");
}

const char* to_string(StandardFamily f) {
    switch (f) {
        case StandardFamily::A: return "A";
        case StandardFamily::D: return "D";
        case StandardFamily::E8: return "E8";
        case StandardFamily::Gamma: return "Gamma";
        case StandardFamily::Cube: return "cube";
        case StandardFamily::Lorentz: return "lorentz";
    }
    return "?";
}

namespace {

Form negated_cartan_a(std::size_t k) {
    IntMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = -2;
        if (i + 1 < k) g(i, i + 1) = g(i + 1, i) = 1;
    }
    return Form(std::move(g));
}

/* Simple roots f_1-f_2, ..., f_{k-1}-f_k, f_{k-1}+f_k. */
Form negated_cartan_d(std::size_t k) {
    require(k >= 2, "bad-rank", "D_k needs k >= 2");
    IntMatrix g(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        g(i, i) = -2;
        if (i + 2 < k) g(i, i + 1) = g(i + 1, i) = 1;
    }
    g(k - 1, k - 1) = -2;
    if (k >= 3) g(k - 1, k - 3) = g(k - 3, k - 1) = 1;
    return Form(std::move(g));
}

/* Bourbaki numbering: the chain 1-3-4-5-6-7-8 with node 2 hanging off
 * node 4. */
Form negated_cartan_e8() {
    IntMatrix c = {
        {2, 0, -1, 0, 0, 0, 0, 0},
        {0, 2, 0, -1, 0, 0, 0, 0},
        {-1, 0, 2, -1, 0, 0, 0, 0},
        {0, -1, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, 0},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, -1},
        {0, 0, 0, 0, 0, 0, -1, 2},
    };
    return Form(c.negated());
}

/* Basis (g, f_2-f_3, ..., f_{k-1}-f_k, f_{k-1}+f_k) with the glue vector
 * g = (1/2, ..., 1/2); it spans D_k + Z g, the index-2 overlattice, and
 * the Gram matrix is unimodular. */
Form gamma_form(std::size_t k) {
    require(k % 4 == 0 && k >= 4, "bad-rank",
            "Gamma_k needs k = 0 mod 4 for an integral Gram matrix");
    IntMatrix g(k, k);
    g(0, 0) = -Int(k / 4);  // -(g . g)
    // chain f_2-f_3, ..., f_{k-1}-f_k at indices 1 .. k-2
    for (std::size_t i = 1; i + 1 < k; ++i) {
        g(i, i) = -2;
        if (i + 2 < k) g(i, i + 1) = g(i + 1, i) = 1;
    }
    g(k - 1, k - 1) = -2;              // f_{k-1}+f_k
    g(0, k - 1) = g(k - 1, 0) = -1;    // g . (f_{k-1}+f_k) = 1, negated
    if (k >= 4) g(k - 1, k - 3) = g(k - 3, k - 1) = 1;
    return Form(std::move(g));
}

}  // namespace

Form standard_form(StandardFamily family, std::size_t k) {
    switch (family) {
        case StandardFamily::A:
            require(k >= 1, "bad-rank", "A_k needs k >= 1");
            return negated_cartan_a(k);
        case StandardFamily::D:
            return negated_cartan_d(k);
        case StandardFamily::E8:
            require(k == 8 || k == 0, "bad-rank", "E8 has rank 8");
            return negated_cartan_e8();
        case StandardFamily::Gamma:
            return gamma_form(k);
        case StandardFamily::Cube: {
            IntMatrix g(k, k);
            for (std::size_t i = 0; i < k; ++i) g(i, i) = -1;
            return Form(std::move(g));
        }
        case StandardFamily::Lorentz: {
            IntMatrix g(k + 1, k + 1);
            g(0, 0) = 1;
            for (std::size_t i = 1; i <= k; ++i) g(i, i) = -1;
            return Form(std::move(g));
        }
    }
    throw InternalError("unreachable standard family");
}

}  // namespace filliform
