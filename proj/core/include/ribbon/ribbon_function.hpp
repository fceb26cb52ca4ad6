#pragma once

#include "ribbon/sympoly.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

/// Spin-weight generating function of semistandard n-ribbon tableaux of
/// the shape with labels at most m: sum of q^{spin} x^{weight}.
SymPoly ribbon_function(const SkewShape& shape, int n, int m);

/// Skew Schur polynomial; ordinary tableaux are the n = 1 case.
SymPoly skew_schur_polynomial(const SkewShape& shape, int m);

/// The q = 1 specialization equals the product of the quotient skew Schur
/// polynomials.
bool quotient_product_check(const SkewShape& shape, int n, int m);

/// Exact symmetry of the ribbon function in m variables.
bool verify_symmetry(const SkewShape& shape, int n, int m);

}  // namespace ribbon
