#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// Default construction gives the empty partition.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses a comma separated part list ("4,2,1"). "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row length, 0 past the last row.
  int part(int row) const;

  long long cells() const;
  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// Skew shape outer/inner; construction checks containment.
class SkewShape {
public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  /// Parses "outer/inner"; a missing "/inner" means a straight shape.
  static SkewShape parse(std::string_view text);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  long long cells() const { return outer_.cells() - inner_.cells(); }

  std::string to_string() const;

  auto operator<=>(const SkewShape&) const = default;

private:
  Partition outer_;
  Partition inner_;
};

/// outer/inner is an ordinary horizontal strip: containment plus no two
/// cells of the difference in one column.
bool is_plain_horizontal_strip(const Partition& outer, const Partition& inner);

/// Largest column height of outer/inner, i.e. the least number of
/// horizontal strips that can fill the skew. Zero when the shapes agree.
int vertical_strip_gap(const Partition& outer, const Partition& inner);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
std::vector<Partition> subpartitions(const Partition& p);

/// Visits every k with base ⊆ k ⊆ bound such that k/base is a horizontal
/// strip of at most max_new_cells cells and bound/k still fits in
/// remaining_after further horizontal strips.
void horizontal_strip_extensions(const Partition& base, const Partition& bound,
                                 int remaining_after, long long max_new_cells,
                                 const std::function<void(const Partition&)>& fn);

/// All mu with top/mu an ordinary horizontal strip.
std::vector<Partition> horizontal_strip_shrinkages(const Partition& top);

}  // namespace ribbon
