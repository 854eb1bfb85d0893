#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbalg {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values that fit in 64-bit numerator/denominator are held inline and
/// combined with 128-bit intermediates; anything larger is promoted to a
/// shared, immutable GMP rational. Equality is structural, so two values
/// compare equal exactly when they denote the same number.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : Rational(static_cast<long long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : num_(value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<long long>::min()) *this = from_wide(value, 1);
  }
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  /// Parses "p", "-p" or "p/q" (whitespace around the slash is allowed).
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const noexcept;

  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;

  /// Throws std::domain_error when the value is zero.
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(int exponent) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(mpq_class value);
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace rbalg
