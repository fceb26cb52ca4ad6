#include "ribbon/ribbon_function.hpp"

namespace ribbon {

SymPoly ribbon_function(const SkewShape& shape, int n, int m) {
  SymPoly out(m);
  enumerate_tableaux(shape, n, m, [&](const RibbonTableau& t) {
    out.add_term(t.weight(), LaurentQ::q_power(t.total_spin()));
  });
  return out;
}

SymPoly skew_schur_polynomial(const SkewShape& shape, int m) {
  return ribbon_function(shape, 1, m);
}

bool quotient_product_check(const SkewShape& shape, int n, int m) {
  SymPoly lhs = ribbon_function(shape, n, m).at_q_one();
  CoreQuotient out = core_quotient(shape.outer(), n);
  CoreQuotient in = core_quotient(shape.inner(), n);
  if (out.core != in.core) return lhs.is_zero();
  SymPoly rhs = SymPoly::constant(m, LaurentQ(1));
  for (int i = 0; i < n; ++i) {
    const Partition& qo = out.quotient[static_cast<std::size_t>(i)];
    const Partition& qi = in.quotient[static_cast<std::size_t>(i)];
    if (!qo.contains(qi)) return lhs.is_zero();
    rhs = rhs * skew_schur_polynomial(SkewShape(qo, qi), m);
  }
  return lhs == rhs;
}

bool verify_symmetry(const SkewShape& shape, int n, int m) {
  return ribbon_function(shape, n, m).is_symmetric();
}

}  // namespace ribbon
