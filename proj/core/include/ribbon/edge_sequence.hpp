#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

/// Doubly infinite 0/1 boundary word stored as a finite window. Bits below
/// the window are 1. Partition style sequences have 0s above the window
/// (finite beta sets, charge-zero normalization: the empty partition is 1
/// exactly at the negative positions); lattice path style sequences are
/// vertical at both ends, i.e. 1s above as well.
class EdgeSequence {
public:
  /// Edge sequence of the empty partition.
  EdgeSequence() = default;

  static EdgeSequence of_partition(const Partition& p);

  /// Window word placed at positions [0, word.size()), 1s on both sides.
  static EdgeSequence of_path_word(std::string_view word);

  int bit(long pos) const;
  void set_bit(long pos, int value);
  bool path_style() const { return above_ == 1; }

  /// Beads at nonnegative positions minus gaps at negative positions;
  /// 0 exactly for charge-normalized partition sequences.
  long charge() const;

  /// Requires a partition style sequence of charge 0.
  Partition to_partition() const;

  /// Subsequence at positions residue + n*k, reindexed by k.
  EdgeSequence runner(int residue, int n) const;

  /// Translated sequence: bit'(k) = bit(k + delta).
  EdgeSequence shifted(long delta) const;

  /// Inverse of runner extraction; runners[i] supplies positions ≡ i (mod n).
  static EdgeSequence interleave(const std::vector<EdgeSequence>& runners);

  bool ribbon_addable(long v, int n) const { return bit(v) == 1 && bit(v + n) == 0; }
  bool ribbon_removable(long v, int n) const { return bit(v) == 0 && bit(v + n) == 1; }

  /// Number of 1s strictly between v and v+n.
  int ones_between(long v, int n) const;

  bool operator==(const EdgeSequence& other) const;

private:
  void normalize();
  void ensure(long pos);

  long lo_ = 0;
  std::vector<std::uint8_t> window_;
  std::uint8_t above_ = 0;
};

/// One n-ribbon realized as a bead move; head_diag is the move's target
/// position, the content of the ribbon's maximal-content cell.
struct RibbonMove {
  long head_diag = 0;
  int spin = 0;
  int runner = 0;
};

struct AddRibbonResult {
  EdgeSequence sequence;
  int spin = 0;
  long head_diag = 0;
};

/// Swaps bits at v (must be 1) and v+n (must be 0); spin is the ribbon
/// height minus one, the count of 1s strictly between the two positions.
AddRibbonResult add_ribbon(const EdgeSequence& e, long v, int n);

/// Inverse bead move: bits at v (must be 0) and v+n (must be 1) swap back.
AddRibbonResult remove_ribbon(const EdgeSequence& e, long v, int n);

/// A bead slide: the bead at start advances `steps` times by n.
struct Slide {
  long start = 0;
  int steps = 0;
};

/// Executes every slide one bead move at a time, always advancing the bead
/// whose next target is largest. This order realizes the canonical tiling
/// of a horizontal ribbon strip; one move is recorded per ribbon.
std::vector<RibbonMove> execute_slides(EdgeSequence& e, int n, const std::vector<Slide>& slides);

/// Reverses execute_slides given the recorded moves.
void undo_moves(EdgeSequence& e, int n, const std::vector<RibbonMove>& moves);

}  // namespace ribbon
