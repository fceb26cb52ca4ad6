#pragma once

#include <map>
#include <vector>

#include "ribbon/laurent.hpp"
#include "ribbon/partition.hpp"

namespace ribbon {

/// Sparse polynomial in x_1..x_m with LaurentQ coefficients, keyed by
/// exponent vectors of length m. Zero coefficients are never stored.
class SymPoly {
public:
  explicit SymPoly(int num_vars);

  static SymPoly constant(int num_vars, const LaurentQ& c);
  static SymPoly monomial(std::vector<int> exps, const LaurentQ& c);

  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, LaurentQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exps, const LaurentQ& c);
  LaurentQ coeff(const std::vector<int>& exps) const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly scaled(const LaurentQ& c) const;

  bool operator==(const SymPoly&) const = default;

  /// Invariance under every adjacent variable swap.
  bool is_symmetric() const;

  /// Substitution q = 1 on every coefficient.
  SymPoly at_q_one() const;

  /// Restriction x_m = 0, result in m-1 variables.
  SymPoly drop_last_var() const;

private:
  int num_vars_ = 0;
  std::map<std::vector<int>, LaurentQ> terms_;
};

/// Schur polynomial in m variables via semistandard tableaux; the zero
/// polynomial when the partition has more than m rows.
SymPoly schur_polynomial(const Partition& lam, int m);

/// Alternating sum over all permutations w of x^{w(alpha)}, signed.
SymPoly alternant(const std::vector<int>& alpha);

/// Expansion of a symmetric polynomial over Schur polynomials by repeated
/// extraction of the lexicographically greatest exponent vector. Throws on
/// non-symmetric input.
std::map<Partition, LaurentQ> schur_expand(const SymPoly& f);

}  // namespace ribbon
