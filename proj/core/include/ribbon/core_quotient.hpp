#pragma once

#include <vector>

#include "ribbon/edge_sequence.hpp"
#include "ribbon/partition.hpp"

namespace ribbon {

/// n-core/n-quotient decomposition of a partition. Runner i of the
/// charge-zero edge sequence collects the positions ≡ i (mod n);
/// offsets[i] maps quotient cell contents to ribbon head diagonals,
/// diag = n*content + offsets[i].
struct CoreQuotient {
  int n = 1;
  Partition core;
  std::vector<Partition> quotient;
  std::vector<long> offsets;

  long runner_charge(int i) const { return (offsets[static_cast<std::size_t>(i)] - i) / n; }
};

CoreQuotient core_quotient(const Partition& p, int n);

/// Inverse of core_quotient; rejects a core that is not an n-core.
Partition combine_core_quotient(const CoreQuotient& cq);

bool is_n_core(const Partition& p, int n);

/// Same core and componentwise quotient containment; equivalent to the
/// existence of a semistandard n-ribbon tableau of the shape.
bool is_ribbon_tileable(const SkewShape& shape, int n);

/// Same core and every quotient component gains an ordinary horizontal strip.
bool is_horizontal_strip(const SkewShape& shape, int n);

/// Bead slides realizing the ordinary horizontal strip outer/inner of one
/// quotient component in full-sequence coordinates.
std::vector<Slide> runner_slides(const Partition& inner, const Partition& outer,
                                 long charge, int residue, int n);

/// Canonical tiling of a horizontal ribbon strip, one move per ribbon.
std::vector<RibbonMove> strip_moves(const SkewShape& shape, int n);

/// Spin of the canonical tiling.
int strip_spin(const SkewShape& shape, int n);

}  // namespace ribbon
