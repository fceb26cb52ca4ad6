#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ribbon/core_quotient.hpp"
#include "ribbon/edge_sequence.hpp"
#include "ribbon/partition.hpp"

namespace ribbon {

/// Reading orientation over head diagonals. Exactly one orientation makes
/// the Yamanouchi expansion reproduce brute-force Schur expansions; the
/// q-LR acceptance suite pins this value.
inline constexpr bool kReadDiagonalsAscending = true;

struct RibbonEntry {
  int label = 0;
  long head_diag = 0;
  int spin = 0;
  int runner = 0;

  auto operator<=>(const RibbonEntry&) const = default;
};

struct ReadingWord {
  std::vector<int> letters;
  std::vector<long> diagonals;

  auto operator<=>(const ReadingWord&) const = default;
};

/// Semistandard n-ribbon tableau: a chain of partitions whose steps are
/// horizontal ribbon strips, step t carrying label t, with the canonical
/// tiling of each step recorded ribbon by ribbon.
class RibbonTableau {
public:
  /// Validates the chain (front = inner shape, back = outer shape, every
  /// step a horizontal ribbon strip) and executes the canonical tilings.
  RibbonTableau(SkewShape shape, int n, std::vector<Partition> chain);

  int ribbon_length() const { return n_; }
  const SkewShape& shape() const { return shape_; }
  const std::vector<Partition>& chain() const { return chain_; }
  const std::vector<RibbonEntry>& ribbons() const { return ribbons_; }
  const std::vector<int>& weight() const { return weight_; }
  int max_label() const { return static_cast<int>(chain_.size()) - 1; }
  int total_spin() const { return total_spin_; }

  bool operator==(const RibbonTableau& other) const {
    return n_ == other.n_ && chain_ == other.chain_;
  }

private:
  RibbonTableau() = default;
  friend class TableauEnumerator;

  int n_ = 1;
  SkewShape shape_;
  std::vector<Partition> chain_;
  std::vector<RibbonEntry> ribbons_;
  std::vector<int> weight_;
  int total_spin_ = 0;
};

int spin(const RibbonTableau& t);

/// Pairs of ribbons labeled a < b whose head diagonals differ by an amount
/// strictly between 0 and n, the smaller label on the higher diagonal.
long long inversions(const RibbonTableau& t);

/// Labels listed by head diagonal in the calibrated orientation; within a
/// diagonal larger labels first, ties broken by runner index.
ReadingWord reading_word(const RibbonTableau& t);

/// Weights of the labels read strictly before diagonal j and through
/// diagonal j inclusive, as compositions of length max_label.
std::pair<std::vector<int>, std::vector<int>> prefix_weights(const RibbonTableau& t, long j);

void enumerate_tableaux(const SkewShape& shape, int n, int max_label,
                        const std::function<void(const RibbonTableau&)>& visit);
std::vector<RibbonTableau> enumerate_tableaux(const SkewShape& shape, int n, int max_label);

/// Standard tableaux: one ribbon per label.
void enumerate_standard_tableaux(const SkewShape& shape, int n,
                                 const std::function<void(const RibbonTableau&)>& visit);

/// The affine relation spin = e - c*inv over all standard tableaux of the
/// shape; c is reported as 2 whenever both calibrations fit. Throws when no
/// single (e, c) fits or when the shape has no standard tableau.
std::pair<long long, int> spin_inversion_constant(const SkewShape& shape, int n);

/// Per-runner label grids: cell (row, col) of quotient component i carries
/// grid[i][row-1][col-1], 0 on inner cells.
std::vector<std::vector<std::vector<int>>> quotient_label_grid(const RibbonTableau& t);

/// Rebuilds a tableau from per-runner label grids; nullopt when the grids
/// do not describe a semistandard chain.
std::optional<RibbonTableau> tableau_from_quotient_labels(
    const SkewShape& shape, int n, const std::vector<std::vector<std::vector<int>>>& grid,
    int max_label);

/// For every tableau of the shape containing a quotient column pair
/// (x above y, labels i and i+1) and every semistandard single change of an
/// i into an i+1, checks inv_x + inv_y is preserved.
bool verify_column_pair_lemma(const SkewShape& shape, int n, int max_label);

}  // namespace ribbon
