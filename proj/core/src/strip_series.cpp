#include "ribbon/strip_series.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace ribbon {

LatticePath::LatticePath(std::string w) : word(std::move(w)) {
  for (char c : word)
    if (c != '0' && c != '1') throw std::invalid_argument("path word must consist of 0s and 1s");
}

namespace {

struct Boundary {
  long bead;  // position with bit 1
  int gap;    // number of consecutive 0s above it on its runner
};

std::vector<Boundary> path_boundaries(const EdgeSequence& e, int n, long lo, long hi) {
  // beads able to slide: bit 1 at v, bit 0 at v+n; the gap counts how far
  // the slide can go before hitting the next bead on the runner
  std::vector<Boundary> out;
  for (long v = lo; v <= hi; ++v) {
    if (!(e.bit(v) == 1 && e.bit(v + n) == 0)) continue;
    int gap = 0;
    while (e.bit(v + static_cast<long>(n) * (gap + 1)) == 0) ++gap;
    out.push_back({v, gap});
  }
  return out;
}

}  // namespace

StripSeries strip_series(const LatticePath& p, int n) {
  if (n < 1) throw std::invalid_argument("ribbon length must be positive");
  // strips grow on the region bounded by the reversed word, so that the
  // reversal identity compares one fixed procedure on p and reverse(p)
  LatticePath rev = p.reversed();
  EdgeSequence base = EdgeSequence::of_path_word(rev.word);
  const long len = static_cast<long>(rev.word.size());
  auto boundaries = path_boundaries(base, n, -static_cast<long>(n), len);

  StripSeries series;
  std::vector<Slide> slides;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == boundaries.size()) {
      EdgeSequence e = base;
      int ribbons = 0, total = 0;
      for (const RibbonMove& m : execute_slides(e, n, slides)) {
        ++ribbons;
        total += m.spin;
      }
      ++series.terms[{ribbons, total}];
      return;
    }
    for (int steps = 0; steps <= boundaries[idx].gap; ++steps) {
      if (steps > 0) slides.push_back({boundaries[idx].bead, steps});
      rec(idx + 1);
      if (steps > 0) slides.pop_back();
    }
  };
  rec(0);
  return series;
}

bool verify_path_reversal(const LatticePath& p, int n) {
  return strip_series(p, n) == strip_series(p.reversed(), n);
}

std::set<long> strip_diagonals(const SkewShape& shape, int n) {
  std::set<long> out;
  for (const RibbonMove& m : strip_moves(shape, n)) out.insert(m.head_diag);
  return out;
}

int strip_spin_on(const SkewShape& shape, int n, const std::set<long>& diags) {
  int total = 0;
  for (const RibbonMove& m : strip_moves(shape, n))
    if (diags.count(m.head_diag)) total += m.spin;
  return total;
}

bool verify_nested_strip_lemma(const Partition& lam, const Partition& mu, const Partition& nu,
                               int n) {
  if (!lam.contains(mu) || !mu.contains(nu))
    throw std::invalid_argument("not a nested strip triple");
  SkewShape lam_mu(lam, mu), lam_nu(lam, nu), mu_nu(mu, nu);
  if (!is_horizontal_strip(lam_mu, n) || !is_horizontal_strip(lam_nu, n) ||
      !is_horizontal_strip(mu_nu, n))
    throw std::invalid_argument("not a nested strip triple");
  std::set<long> upper = strip_diagonals(lam_mu, n);
  std::set<long> lower = strip_diagonals(mu_nu, n);
  int lhs = strip_spin_on(lam_nu, n, upper) - strip_spin(lam_mu, n);
  int rhs = strip_spin_on(lam_nu, n, lower) - strip_spin(mu_nu, n);
  return lhs == rhs;
}

}  // namespace ribbon
