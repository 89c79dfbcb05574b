#pragma once

#include "filliform/form.hpp"

namespace filliform {

enum class StandardFamily { A, D, E8, Gamma, Cube, Lorentz };

StandardFamily family_from_string(const std::string& name);
const char* to_string(StandardFamily f);

/* Canonical Gram matrices. A_k, D_k, E8 and Gamma_k are negative
 * definite; cube(k) is <-1>^k; lorentz(k) is diag(+1, -1 x k) of rank
 * k+1, the intersection form of CP^2 # k CP^2bar with basis (h, e_1 ...
 * e_k). Gamma_k is D_k extended by the glue vector (1/2, ..., 1/2) and
 * needs k = 0 mod 4, k >= 4, for an integral Gram matrix. */
Form standard_form(StandardFamily family, std::size_t k);

}  // namespace filliform
