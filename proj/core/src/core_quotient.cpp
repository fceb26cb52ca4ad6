#include "ribbon/core_quotient.hpp"

#include <numeric>
#include <stdexcept>

namespace ribbon {

CoreQuotient core_quotient(const Partition& p, int n) {
  if (n < 1) throw std::invalid_argument("ribbon length must be positive");
  CoreQuotient cq;
  cq.n = n;
  EdgeSequence e = EdgeSequence::of_partition(p);
  std::vector<EdgeSequence> pushed(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    EdgeSequence s = e.runner(i, n);
    long c = s.charge();
    cq.quotient.push_back(s.shifted(c).to_partition());
    cq.offsets.push_back(static_cast<long>(n) * c + i);
    // all beads pushed down: 1s exactly below position c
    pushed[static_cast<std::size_t>(i)] = EdgeSequence().shifted(-c);
  }
  cq.core = EdgeSequence::interleave(pushed).to_partition();
  return cq;
}

Partition combine_core_quotient(const CoreQuotient& cq) {
  if (cq.n < 1) throw std::invalid_argument("ribbon length must be positive");
  if (static_cast<int>(cq.quotient.size()) != cq.n)
    throw std::invalid_argument("quotient must have n components");
  if (!is_n_core(cq.core, cq.n)) throw std::invalid_argument("core is not an n-core");
  EdgeSequence core_edge = EdgeSequence::of_partition(cq.core);
  std::vector<EdgeSequence> runners(static_cast<std::size_t>(cq.n));
  for (int i = 0; i < cq.n; ++i) {
    long c = core_edge.runner(i, cq.n).charge();
    runners[static_cast<std::size_t>(i)] =
        EdgeSequence::of_partition(cq.quotient[static_cast<std::size_t>(i)]).shifted(-c);
  }
  return EdgeSequence::interleave(runners).to_partition();
}

bool is_n_core(const Partition& p, int n) {
  CoreQuotient cq = core_quotient(p, n);
  for (const Partition& q : cq.quotient)
    if (!q.empty()) return false;
  return true;
}

bool is_ribbon_tileable(const SkewShape& shape, int n) {
  CoreQuotient out = core_quotient(shape.outer(), n);
  CoreQuotient in = core_quotient(shape.inner(), n);
  if (out.core != in.core) return false;
  for (int i = 0; i < n; ++i)
    if (!out.quotient[static_cast<std::size_t>(i)].contains(in.quotient[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

bool is_horizontal_strip(const SkewShape& shape, int n) {
  CoreQuotient out = core_quotient(shape.outer(), n);
  CoreQuotient in = core_quotient(shape.inner(), n);
  if (out.core != in.core) return false;
  for (int i = 0; i < n; ++i)
    if (!is_plain_horizontal_strip(out.quotient[static_cast<std::size_t>(i)],
                                   in.quotient[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

std::vector<Slide> runner_slides(const Partition& inner, const Partition& outer,
                                 long charge, int residue, int n) {
  std::vector<Slide> slides;
  for (int r = 1; r <= outer.rows(); ++r) {
    int steps = outer.part(r) - inner.part(r);
    if (steps < 0) throw std::invalid_argument("runner_slides requires containment");
    if (steps == 0) continue;
    long start = static_cast<long>(n) * (inner.part(r) - r + charge) + residue;
    slides.push_back({start, steps});
  }
  return slides;
}

std::vector<RibbonMove> strip_moves(const SkewShape& shape, int n) {
  if (!is_horizontal_strip(shape, n))
    throw std::invalid_argument("shape is not a horizontal ribbon strip");
  CoreQuotient out = core_quotient(shape.outer(), n);
  CoreQuotient in = core_quotient(shape.inner(), n);
  std::vector<Slide> slides;
  for (int i = 0; i < n; ++i) {
    auto runner = runner_slides(in.quotient[static_cast<std::size_t>(i)],
                                out.quotient[static_cast<std::size_t>(i)],
                                in.runner_charge(i), i, n);
    slides.insert(slides.end(), runner.begin(), runner.end());
  }
  EdgeSequence e = EdgeSequence::of_partition(shape.inner());
  return execute_slides(e, n, slides);
}

int strip_spin(const SkewShape& shape, int n) {
  int total = 0;
  for (const RibbonMove& m : strip_moves(shape, n)) total += m.spin;
  return total;
}

}  // namespace ribbon
