#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "ribbon/core_quotient.hpp"
#include "ribbon/edge_sequence.hpp"

namespace ribbon {

/// Doubly infinite lattice path vertical at both ends: a finite 0/1 window
/// word with implicit 1s on both sides.
struct LatticePath {
  std::string word;

  LatticePath() = default;
  explicit LatticePath(std::string w);
  LatticePath reversed() const { return LatticePath(std::string(word.rbegin(), word.rend())); }

  auto operator<=>(const LatticePath&) const = default;
};

/// Generating function over horizontal ribbon strips attachable to the
/// path: multiplicity of each (ribbon count, spin) pair. The empty strip
/// contributes the term (0, 0).
struct StripSeries {
  std::map<std::pair<int, int>, long long> terms;

  bool operator==(const StripSeries&) const = default;
};

/// Enumerates every horizontal n-ribbon strip attachable to the region
/// bounded by the reversed window word, with canonical spins.
StripSeries strip_series(const LatticePath& p, int n);

/// strip_series agrees on the path and its reversal.
bool verify_path_reversal(const LatticePath& p, int n);

/// Head diagonals of the canonical tiling of a horizontal ribbon strip.
std::set<long> strip_diagonals(const SkewShape& shape, int n);

/// Spin of the ribbons of the canonical tiling whose heads lie in diags.
int strip_spin_on(const SkewShape& shape, int n, const std::set<long>& diags);

/// For nested horizontal strips nu ⊆ mu ⊆ lam, checks
/// spin_I(lam/nu) - spin(lam/mu) = spin_J(lam/nu) - spin(mu/nu)
/// with I, J the diagonal sets of lam/mu and mu/nu.
bool verify_nested_strip_lemma(const Partition& lam, const Partition& mu, const Partition& nu,
                               int n);

}  // namespace ribbon
