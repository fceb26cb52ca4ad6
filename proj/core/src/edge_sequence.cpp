#include "ribbon/edge_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

EdgeSequence EdgeSequence::of_partition(const Partition& p) {
  EdgeSequence e;
  const int r = p.rows();
  if (r == 0) return e;
  e.lo_ = -r;
  e.window_.assign(static_cast<std::size_t>(p.part(1) + r), 0);
  for (int j = 1; j <= r; ++j) e.window_[static_cast<std::size_t>(p.part(j) - j + r)] = 1;
  e.normalize();
  return e;
}

EdgeSequence EdgeSequence::of_path_word(std::string_view word) {
  EdgeSequence e;
  e.above_ = 1;
  e.lo_ = 0;
  e.window_.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("path word must consist of 0s and 1s");
    e.window_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  e.normalize();
  return e;
}

int EdgeSequence::bit(long pos) const {
  if (pos < lo_) return 1;
  long idx = pos - lo_;
  if (idx >= static_cast<long>(window_.size())) return above_;
  return window_[static_cast<std::size_t>(idx)];
}

void EdgeSequence::ensure(long pos) {
  if (window_.empty()) {
    std::uint8_t fill = (pos < lo_) ? std::uint8_t{1} : above_;
    lo_ = pos;
    window_.assign(1, fill);
    return;
  }
  if (pos < lo_) {
    std::vector<std::uint8_t> grown(static_cast<std::size_t>(lo_ - pos), 1);
    grown.insert(grown.end(), window_.begin(), window_.end());
    window_ = std::move(grown);
    lo_ = pos;
  } else if (pos >= lo_ + static_cast<long>(window_.size())) {
    window_.resize(static_cast<std::size_t>(pos - lo_ + 1), above_);
  }
}

void EdgeSequence::set_bit(long pos, int value) {
  ensure(pos);
  window_[static_cast<std::size_t>(pos - lo_)] = static_cast<std::uint8_t>(value);
}

void EdgeSequence::normalize() {
  std::size_t front = 0;
  while (front < window_.size() && window_[front] == 1) ++front;
  if (front > 0) {
    window_.erase(window_.begin(), window_.begin() + static_cast<long>(front));
    lo_ += static_cast<long>(front);
  }
  while (!window_.empty() && window_.back() == above_) window_.pop_back();
  // an all-ones sequence has no distinguished position
  if (window_.empty() && above_ == 1) lo_ = 0;
}

long EdgeSequence::charge() const {
  if (above_ != 0) throw std::logic_error("charge is defined for partition style sequences only");
  long c = 0;
  const long hi = lo_ + static_cast<long>(window_.size());
  for (long pos = lo_; pos < hi; ++pos) {
    if (pos >= 0 && bit(pos) == 1) ++c;
    if (pos < 0 && bit(pos) == 0) --c;
  }
  if (lo_ > 0) c += lo_;  // positions [0, lo_) sit below the window, all 1
  if (hi < 0) c += hi;    // positions [hi, 0) sit above the window, all 0
  return c;
}

Partition EdgeSequence::to_partition() const {
  if (above_ != 0) throw std::logic_error("to_partition requires a partition style sequence");
  if (charge() != 0) throw std::logic_error("to_partition requires charge 0");
  std::vector<int> parts;
  long hi = lo_ + static_cast<long>(window_.size());
  int row = 0;
  for (long pos = hi - 1; pos >= lo_; --pos) {
    if (bit(pos) == 1) {
      ++row;
      long len = pos + row;
      if (len < 0) throw std::logic_error("corrupt edge sequence");
      if (len == 0) return Partition(std::move(parts));
      parts.push_back(static_cast<int>(len));
    }
  }
  // rows below the window contribute trailing parts until length 0
  long pos = lo_ - 1;
  while (true) {
    ++row;
    long len = pos + row;
    if (len <= 0) break;
    parts.push_back(static_cast<int>(len));
    --pos;
  }
  return Partition(std::move(parts));
}

EdgeSequence EdgeSequence::runner(int residue, int n) const {
  EdgeSequence r;
  r.above_ = above_;
  if (window_.empty()) return r;
  long hi = lo_ + static_cast<long>(window_.size());
  long k0 = floor_div(lo_ - residue + n - 1, n);  // least k with nk+residue >= lo_
  long k1 = floor_div(hi - 1 - residue, n);       // greatest k with nk+residue < hi
  if (k1 < k0) return r;
  r.lo_ = k0;
  r.window_.resize(static_cast<std::size_t>(k1 - k0 + 1));
  for (long k = k0; k <= k1; ++k)
    r.window_[static_cast<std::size_t>(k - k0)] =
        static_cast<std::uint8_t>(bit(n * k + residue));
  r.normalize();
  return r;
}

EdgeSequence EdgeSequence::shifted(long delta) const {
  EdgeSequence s(*this);
  s.lo_ -= delta;
  return s;
}

EdgeSequence EdgeSequence::interleave(const std::vector<EdgeSequence>& runners) {
  const int n = static_cast<int>(runners.size());
  if (n == 0) throw std::invalid_argument("interleave requires at least one runner");
  EdgeSequence e;
  e.above_ = runners[0].above_;
  long lo = 0, hi = 0;
  for (int i = 0; i < n; ++i) {
    if (runners[i].above_ != e.above_)
      throw std::invalid_argument("interleave requires runners of one style");
    // cover one cell past the window on each side so empty-window runners
    // with a nonzero transition point still contribute their step
    long rlo = n * (runners[i].lo_ - 1) + i;
    long rhi = n * (runners[i].lo_ + static_cast<long>(runners[i].window_.size())) + i;
    if (i == 0) {
      lo = rlo;
      hi = rhi;
    } else {
      lo = std::min(lo, rlo);
      hi = std::max(hi, rhi);
    }
  }
  e.lo_ = lo;
  e.window_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (long pos = lo; pos <= hi; ++pos) {
    int residue = static_cast<int>(((pos % n) + n) % n);
    long k = floor_div(pos - residue, n);
    e.window_[static_cast<std::size_t>(pos - lo)] =
        static_cast<std::uint8_t>(runners[residue].bit(k));
  }
  e.normalize();
  return e;
}

int EdgeSequence::ones_between(long v, int n) const {
  int count = 0;
  for (long pos = v + 1; pos < v + n; ++pos) count += bit(pos);
  return count;
}

bool EdgeSequence::operator==(const EdgeSequence& other) const {
  return above_ == other.above_ && lo_ == other.lo_ && window_ == other.window_;
}

AddRibbonResult add_ribbon(const EdgeSequence& e, long v, int n) {
  if (!e.ribbon_addable(v, n)) throw std::invalid_argument("no ribbon addable at v");
  AddRibbonResult out{e, e.ones_between(v, n), v + n};
  out.sequence.set_bit(v, 0);
  out.sequence.set_bit(v + n, 1);
  return out;
}

AddRibbonResult remove_ribbon(const EdgeSequence& e, long v, int n) {
  if (!e.ribbon_removable(v, n)) throw std::invalid_argument("no ribbon removable at v");
  AddRibbonResult out{e, e.ones_between(v, n), v + n};
  out.sequence.set_bit(v, 1);
  out.sequence.set_bit(v + n, 0);
  return out;
}

std::vector<RibbonMove> execute_slides(EdgeSequence& e, int n, const std::vector<Slide>& slides) {
  struct Pending {
    long cur;
    int remaining;
  };
  std::vector<Pending> pending;
  pending.reserve(slides.size());
  for (const Slide& s : slides)
    if (s.steps > 0) pending.push_back({s.start, s.steps});

  std::vector<RibbonMove> moves;
  while (true) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(pending.size()); ++i) {
      if (pending[i].remaining == 0) continue;
      if (best < 0 || pending[i].cur > pending[best].cur) best = i;
    }
    if (best < 0) break;
    long v = pending[best].cur;
    if (e.bit(v) != 1 || e.bit(v + n) != 0)
      throw std::logic_error("invalid slide set for horizontal strip");
    int spin = e.ones_between(v, n);
    e.set_bit(v, 0);
    e.set_bit(v + n, 1);
    moves.push_back({v + n, spin, static_cast<int>((((v + n) % n) + n) % n)});
    pending[best].cur += n;
    --pending[best].remaining;
  }
  return moves;
}

void undo_moves(EdgeSequence& e, int n, const std::vector<RibbonMove>& moves) {
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    e.set_bit(it->head_diag, 0);
    e.set_bit(it->head_diag - n, 1);
  }
}

}  // namespace ribbon
