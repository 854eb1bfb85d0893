#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "rbalg/rational.hpp"

namespace rbalg {

/// Laurent series in ε with exact coefficients, stored densely from the lowest
/// nonzero exponent. A finite truncation order T means every exponent above T
/// is unknown; kExact marks a Laurent polynomial known in full.
class LaurentSeries {
 public:
  static constexpr int kExact = INT_MAX;

  LaurentSeries() = default;
  explicit LaurentSeries(const Rational& constant);
  static LaurentSeries monomial(const Rational& coeff, int exponent);
  static LaurentSeries from_map(const std::map<int, Rational>& coeffs, int truncation = kExact);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_exact() const { return trunc_ == kExact; }
  [[nodiscard]] int truncation() const { return trunc_; }
  // Lowest stored exponent; for zero this is truncation()+1 (or kExact).
  [[nodiscard]] int valuation() const;
  [[nodiscard]] int max_exponent() const;
  [[nodiscard]] Rational coeff(int exponent) const;
  [[nodiscard]] std::map<int, Rational> terms() const;

  // Strictly negative powers (the minimal-subtraction projection) and the rest.
  [[nodiscard]] LaurentSeries pole_part() const;
  [[nodiscard]] LaurentSeries regular_part() const;
  [[nodiscard]] int pole_order() const;  // 0 when pole-free
  [[nodiscard]] LaurentSeries truncated(int order) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Structural: same coefficients and same truncation order.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
  int trunc_ = kExact;
};

struct WindowComparison {
  bool equal;               // coefficients agree on the common known window
  bool truncation_mismatch; // the two operands carry different truncation orders
};

WindowComparison compare_on_common_window(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace rbalg
