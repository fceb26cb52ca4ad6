#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace ribbon {

using Int = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in q, stored as coefficients of
/// q^{min_deg}, q^{min_deg+1}, ... Canonical form keeps leading and
/// trailing coefficients nonzero; the zero polynomial is empty.
class LaurentQ {
public:
  LaurentQ() = default;
  LaurentQ(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentQ(Int constant);        // NOLINT(google-explicit-constructor)
  LaurentQ(long min_deg, std::vector<Int> coeffs);

  static LaurentQ q_power(long k);
  static LaurentQ monomial(Int c, long deg);

  bool is_zero() const { return coeffs_.empty(); }
  long min_deg() const { return min_deg_; }
  long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(long deg) const;

  /// Evaluation at q = 1.
  Int at_one() const;

  /// True when every coefficient is a nonnegative integer.
  bool nonnegative() const;

  /// Substitution q -> q^k for k >= 1.
  LaurentQ substitute_power(int k) const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator-=(const LaurentQ& other);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);

  bool operator==(const LaurentQ&) const = default;

  std::string to_string() const;

private:
  void normalize();

  long min_deg_ = 0;
  std::vector<Int> coeffs_;
};

}  // namespace ribbon
