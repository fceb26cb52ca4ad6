#pragma once

#include <map>
#include <optional>

#include "ribbon/ribbon_function.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

/// Generalized domino q-Littlewood-Richardson coefficients
/// c^lambda_{mu/rho,nu}(q), keyed by the partition lambda.
struct QLRTable {
  SkewShape mu_rho;
  Partition nu;
  std::map<Partition, LaurentQ> coeffs;

  bool operator==(const QLRTable&) const = default;
};

/// Every prefix satisfies wt_l + lam_l >= wt_{l+1} + lam_{l+1}.
bool is_lambda_yamanouchi(const std::vector<int>& letters, const Partition& lam);

/// Coefficient table from nu-Yamanouchi domino tableaux: the tableau of
/// weight w and spin s contributes q^s to the coefficient of w + nu.
QLRTable qlr_yamanouchi(const SkewShape& mu_rho, const Partition& nu);

/// Oracle side: Schur expansion of s_nu(X) * G_{mu/rho}(X;q) in
/// m = |mu/rho|/2 + |nu| variables.
QLRTable qlr_bruteforce(const SkewShape& mu_rho, const Partition& nu);

/// Spin-preserving involution swapping the counts of labels k and k+1.
RibbonTableau bender_knuth(const RibbonTableau& t, int k);

/// Witness of the first violated prefix condition of the reading word:
/// lam_k + wt_k(before j) < lam_{k+1} + wt_{k+1}(through j), with j the
/// earliest boundary diagonal in reading order and k minimal.
struct BadPair {
  long boundary_diag = 0;
  int row_index = 0;

  auto operator<=>(const BadPair&) const = default;
};

std::optional<BadPair> find_bad_pair(const RibbonTableau& t, const Partition& lam);

/// Sign-reversing, spin-preserving involution on the Bad Guys: relabels the
/// k/k+1 ribbons past the boundary diagonal so that
/// wt(D*) + lam + delta = s_k (wt(D) + lam + delta).
RibbonTableau bad_involution(const RibbonTableau& t, const Partition& lam);

/// Sum over all tableaux of q^spin a_{wt+nu+delta} equals the sum over
/// nu-Yamanouchi tableaux only; Bad Guys cancel in pairs.
bool verify_cancellation(const SkewShape& mu_rho, const Partition& nu, int m);

}  // namespace ribbon
