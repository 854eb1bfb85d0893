#include "rbalg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace rbalg {

LaurentSeries::LaurentSeries(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentSeries LaurentSeries::monomial(const Rational& coeff, int exponent) {
  LaurentSeries s;
  if (!coeff.is_zero()) {
    s.low_ = exponent;
    s.coeffs_.push_back(coeff);
  }
  return s;
}

LaurentSeries LaurentSeries::from_map(const std::map<int, Rational>& coeffs, int truncation) {
  LaurentSeries s;
  s.trunc_ = truncation;
  if (coeffs.empty()) return s;
  s.low_ = coeffs.begin()->first;
  s.coeffs_.assign(static_cast<std::size_t>(coeffs.rbegin()->first - s.low_ + 1), Rational());
  for (const auto& [e, c] : coeffs) s.coeffs_[static_cast<std::size_t>(e - s.low_)] = c;
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  if (trunc_ != kExact) {
    long keep = static_cast<long>(trunc_) - low_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::size_t>(keep) < coeffs_.size()) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

int LaurentSeries::valuation() const {
  if (coeffs_.empty()) return trunc_ == kExact ? kExact : trunc_ + 1;
  return low_;
}

int LaurentSeries::max_exponent() const {
  return coeffs_.empty() ? INT_MIN : low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentSeries::coeff(int exponent) const {
  long i = static_cast<long>(exponent) - low_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

std::map<int, Rational> LaurentSeries::terms() const {
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentSeries LaurentSeries::pole_part() const {
  LaurentSeries s;
  if (coeffs_.empty() || low_ >= 0) return s;
  s.low_ = low_;
  s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::min<long>(-low_, static_cast<long>(coeffs_.size())));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::regular_part() const {
  LaurentSeries s = *this;
  if (coeffs_.empty() || low_ >= 0) return s;
  long cut = std::min<long>(-low_, static_cast<long>(coeffs_.size()));
  s.coeffs_.erase(s.coeffs_.begin(), s.coeffs_.begin() + cut);
  s.low_ = low_ + static_cast<int>(cut);
  s.normalize();
  return s;
}

int LaurentSeries::pole_order() const { return coeffs_.empty() || low_ >= 0 ? 0 : -low_; }

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries s = *this;
  s.trunc_ = std::min(trunc_, order);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.coeffs_.empty() && b.trunc_ == LaurentSeries::kExact) return a;
  if (a.coeffs_.empty() && a.trunc_ == LaurentSeries::kExact) return b;
  LaurentSeries s;
  s.trunc_ = std::min(a.trunc_, b.trunc_);
  if (a.coeffs_.empty()) {
    s.low_ = b.low_;
    s.coeffs_ = b.coeffs_;
  } else if (b.coeffs_.empty()) {
    s.low_ = a.low_;
    s.coeffs_ = a.coeffs_;
  } else {
    s.low_ = std::min(a.low_, b.low_);
    int high = std::max(a.max_exponent(), b.max_exponent());
    s.coeffs_.assign(static_cast<std::size_t>(high - s.low_ + 1), Rational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) s.coeffs_[i + static_cast<std::size_t>(a.low_ - s.low_)] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) s.coeffs_[i + static_cast<std::size_t>(b.low_ - s.low_)] += b.coeffs_[i];
  }
  s.normalize();
  return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  auto bound = [](const LaurentSeries& x, const LaurentSeries& y) -> long {
    if (x.trunc_ == LaurentSeries::kExact) return LaurentSeries::kExact;
    if (y.coeffs_.empty() && y.trunc_ == LaurentSeries::kExact) return LaurentSeries::kExact;
    return static_cast<long>(x.trunc_) + y.valuation();
  };
  long t = std::min(bound(a, b), bound(b, a));
  s.trunc_ = static_cast<int>(std::clamp<long>(t, INT_MIN, LaurentSeries::kExact));
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    s.normalize();
    return s;
  }
  s.low_ = a.low_ + b.low_;
  s.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  s.normalize();
  return s;
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& a) {
  LaurentSeries s = a;
  if (c.is_zero()) {
    s.coeffs_.clear();
    s.low_ = 0;
    return s;
  }
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    int e = low_ + static_cast<int>(i);
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational mag = c.sign() < 0 ? -c : c;
    if (e == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "eps^" << e;
    }
    first = false;
  }
  if (first) os << "0";
  if (trunc_ != kExact) os << " + O(eps^" << trunc_ + 1 << ")";
  return os.str();
}

WindowComparison compare_on_common_window(const LaurentSeries& a, const LaurentSeries& b) {
  int t = std::min(a.truncation(), b.truncation());
  LaurentSeries x = a.truncated(t);
  LaurentSeries y = b.truncated(t);
  return {x.terms() == y.terms(), a.truncation() != b.truncation()};
}

}  // namespace rbalg
