#include "ribbon/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ribbon {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("empty part in partition string");
    int value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid character in partition string");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw std::invalid_argument("partition part out of range");
    }
    parts.push_back(value);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return Partition(std::move(parts));
}

int Partition::part(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

long long Partition::cells() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> cols(parts_[0], 0);
  for (int len : parts_)
    for (int c = 0; c < len; ++c) ++cols[c];
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("skew shape requires inner contained in outer");
}

SkewShape SkewShape::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text), Partition());
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "/" + inner_.to_string();
}

bool is_plain_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int r = 1; r < outer.rows(); ++r)
    if (outer.part(r + 1) > inner.part(r)) return false;
  return true;
}

int vertical_strip_gap(const Partition& outer, const Partition& inner) {
  int gap = 0;
  for (int c = 1; c <= outer.part(1); ++c) {
    int hi = 0, lo = 0;
    for (int r = 1; r <= outer.rows(); ++r) {
      if (outer.part(r) >= c) ++hi;
      if (inner.part(r) >= c) ++lo;
    }
    gap = std::max(gap, hi - lo);
  }
  return gap;
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int next = std::min(remaining, cap); next >= 1; --next) {
    acc.push_back(next);
    partitions_rec(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto batch = partitions_of(k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> acc;
  const int rows = p.rows();
  std::function<void(int, int)> rec = [&](int row, int cap) {
    out.push_back(Partition(acc));
    if (row > rows) return;
    for (int len = 1; len <= std::min(cap, p.part(row)); ++len) {
      acc.push_back(len);
      rec(row + 1, len);
      acc.pop_back();
    }
  };
  rec(1, rows == 0 ? 0 : p.part(1));
  return out;
}

void horizontal_strip_extensions(const Partition& base, const Partition& bound,
                                 int remaining_after, long long max_new_cells,
                                 const std::function<void(const Partition&)>& fn) {
  if (!bound.contains(base)) return;
  const int rows = bound.rows();
  std::vector<int> acc(rows, 0);
  std::function<void(int, long long)> rec = [&](int row, long long used) {
    if (row > rows) {
      std::vector<int> trimmed(acc.begin(), acc.begin() + rows);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      Partition cand{std::move(trimmed)};
      if (vertical_strip_gap(bound, cand) <= remaining_after) fn(cand);
      return;
    }
    int lo = base.part(row);
    int hi = std::min(bound.part(row), row == 1 ? bound.part(1) : base.part(row - 1));
    for (int len = lo; len <= hi; ++len) {
      if (used + (len - lo) > max_new_cells) break;
      acc[row - 1] = len;
      rec(row + 1, used + (len - lo));
    }
    acc[row - 1] = 0;
  };
  rec(1, 0);
}

std::vector<Partition> horizontal_strip_shrinkages(const Partition& top) {
  std::vector<Partition> out;
  const int rows = top.rows();
  std::vector<int> acc(rows, 0);
  std::function<void(int)> rec = [&](int row) {
    if (row > rows) {
      std::vector<int> trimmed(acc.begin(), acc.begin() + rows);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      out.push_back(Partition(std::move(trimmed)));
      return;
    }
    int lo = top.part(row + 1);
    int hi = std::min(top.part(row), row == 1 ? top.part(1) : acc[row - 2]);
    for (int len = lo; len <= hi; ++len) {
      acc[row - 1] = len;
      rec(row + 1);
    }
    acc[row - 1] = 0;
  };
  rec(1);
  return out;
}

}  // namespace ribbon
