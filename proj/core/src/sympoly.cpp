#include "ribbon/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

SymPoly::SymPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("number of variables must be nonnegative");
}

SymPoly SymPoly::constant(int num_vars, const LaurentQ& c) {
  SymPoly out(num_vars);
  out.add_term(std::vector<int>(static_cast<std::size_t>(num_vars), 0), c);
  return out;
}

SymPoly SymPoly::monomial(std::vector<int> exps, const LaurentQ& c) {
  SymPoly out(static_cast<int>(exps.size()));
  out.add_term(exps, c);
  return out;
}

void SymPoly::add_term(const std::vector<int>& exps, const LaurentQ& c) {
  if (static_cast<int>(exps.size()) != num_vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentQ SymPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? LaurentQ() : it->second;
}

SymPoly SymPoly::operator-() const {
  SymPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("cannot add polynomials in different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("cannot subtract polynomials in different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.num_vars_ != b.num_vars_)
    throw std::invalid_argument("cannot multiply polynomials in different variable counts");
  SymPoly out(a.num_vars_);
  std::vector<int> exps(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  return out;
}

SymPoly SymPoly::scaled(const LaurentQ& c) const {
  SymPoly out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool SymPoly::is_symmetric() const {
  std::vector<int> swapped;
  for (int j = 0; j + 1 < num_vars_; ++j) {
    for (const auto& [e, c] : terms_) {
      swapped = e;
      std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(j + 1)]);
      if (coeff(swapped) != c) return false;
    }
  }
  return true;
}

SymPoly SymPoly::at_q_one() const {
  SymPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, LaurentQ(c.at_one()));
  return out;
}

SymPoly SymPoly::drop_last_var() const {
  if (num_vars_ == 0) throw std::logic_error("no variable to drop");
  SymPoly out(num_vars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e.back() != 0) continue;
    out.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
  }
  return out;
}

SymPoly schur_polynomial(const Partition& lam, int m) {
  SymPoly out(m);
  if (lam.rows() > m) return out;
  std::vector<int> weight(static_cast<std::size_t>(m), 0);
  // chains of ordinary horizontal strips from the empty shape to lam
  std::function<void(int, const Partition&)> rec = [&](int label, const Partition& cur) {
    if (label > m) {
      if (cur == lam) out.add_term(weight, LaurentQ(1));
      return;
    }
    horizontal_strip_extensions(cur, lam, m - label, lam.cells(), [&](const Partition& next) {
      weight[static_cast<std::size_t>(label - 1)] =
          static_cast<int>(next.cells() - cur.cells());
      rec(label + 1, next);
      weight[static_cast<std::size_t>(label - 1)] = 0;
    });
  };
  rec(1, Partition());
  return out;
}

SymPoly alternant(const std::vector<int>& alpha) {
  const int m = static_cast<int>(alpha.size());
  SymPoly out(m);
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<int> exps(static_cast<std::size_t>(m));
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    for (int i = 0; i < m; ++i)
      exps[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out.add_term(exps, (inv % 2 == 0) ? LaurentQ(1) : LaurentQ(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::map<Partition, LaurentQ> schur_expand(const SymPoly& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("schur_expand requires a symmetric polynomial");
  std::map<Partition, LaurentQ> out;
  SymPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    std::vector<int> exps = lead;
    for (std::size_t i = 1; i < exps.size(); ++i)
      if (exps[i] > exps[i - 1])
        throw std::logic_error("leading exponent of a symmetric polynomial must be a partition");
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    Partition lam(exps);
    LaurentQ coeff = c;
    rest -= schur_polynomial(lam, rest.num_vars()).scaled(coeff);
    out.emplace(std::move(lam), std::move(coeff));
  }
  return out;
}

}  // namespace ribbon
