#include "ribbon/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbon {

LaurentQ::LaurentQ(long long constant) {
  if (constant != 0) coeffs_.assign(1, Int(constant));
}

LaurentQ::LaurentQ(Int constant) {
  if (constant != 0) coeffs_.assign(1, std::move(constant));
}

LaurentQ::LaurentQ(long min_deg, std::vector<Int> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentQ LaurentQ::q_power(long k) { return monomial(Int(1), k); }

LaurentQ LaurentQ::monomial(Int c, long deg) {
  LaurentQ out;
  if (c != 0) {
    out.min_deg_ = deg;
    out.coeffs_.assign(1, std::move(c));
  }
  return out;
}

Int LaurentQ::coeff(long deg) const {
  long idx = deg - min_deg_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

Int LaurentQ::at_one() const {
  Int sum = 0;
  for (const Int& c : coeffs_) sum += c;
  return sum;
}

bool LaurentQ::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

LaurentQ LaurentQ::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("substitute_power requires k >= 1");
  LaurentQ out;
  if (is_zero()) return out;
  out.min_deg_ = min_deg_ * k;
  out.coeffs_.assign(static_cast<std::size_t>((coeffs_.size() - 1) * k + 1), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * k] = coeffs_[i];
  out.normalize();
  return out;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out(*this);
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  long lo = std::min(min_deg_, other.min_deg_);
  long hi = std::max(max_deg(), other.max_deg());
  std::vector<Int> merged(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    merged[static_cast<std::size_t>(min_deg_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    merged[static_cast<std::size_t>(other.min_deg_ - lo) + i] += other.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(merged);
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) { return *this += -other; }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  if (a.is_zero() || b.is_zero()) return out;
  out.min_deg_ = a.min_deg_ + b.min_deg_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.normalize();
  return out;
}

void LaurentQ::normalize() {
  std::size_t front = 0;
  while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
  if (front == coeffs_.size()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  if (front > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(front));
    min_deg_ += static_cast<long>(front);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string LaurentQ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long d = max_deg(); d >= min_deg(); --d) {
    Int c = coeff(d);
    if (c == 0) continue;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    std::string coeff_str = c.str();
    if (d == 0) {
      out += coeff_str;
    } else {
      if (coeff_str != "1") out += coeff_str + "*";
      out += "q";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace ribbon
