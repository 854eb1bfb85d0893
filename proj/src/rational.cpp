#include "rbalg/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rbalg/errors.hpp"

namespace rbalg {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows on the fast path.
bool fits(i128 v) { return v > kMin && v <= kMax; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != kMin; }

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const mpz_class& value) { *this = from_mpq(mpq_class(value)); }

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (mpz_fits(value.get_num()) && mpz_fits(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
  } else {
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational: '" + std::string(text) + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(buf, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(slash == std::string_view::npos ? text : text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  return from_mpq(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<unsigned long>(den_));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == b.den_) {
    i128 n = static_cast<i128>(a.num_) + b.num_;
    if (a.den_ == 1 && fits(n)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      return r;
    }
    return Rational::from_wide(n, a.den_);
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  if (a.den_ == 1 && b.den_ == 1) {
    i128 n = static_cast<i128>(a.num_) * b.num_;
    if (fits(n)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      return r;
    }
  }
  // Cross-cancel first so the 128-bit products are already reduced.
  std::int64_t g1 = std::gcd(a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_, a.den_);
  i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical storage: small and big never coincide
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational();
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace rbalg
