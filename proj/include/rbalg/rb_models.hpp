#pragma once

#include <string>
#include <vector>

#include "rbalg/laurent.hpp"
#include "rbalg/ncpoly.hpp"
#include "rbalg/rb_core.hpp"

namespace rbalg {

/// Univariate polynomial in x with exact coefficients, c[i] multiplying x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  explicit UPoly(const Rational& constant) : UPoly(std::vector<Rational>{constant}) {}

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] UPoly integral() const;  // ∫_0^x
  [[nodiscard]] std::string to_string() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Sequences of noncommutative polynomials with the partial-sum operator.

struct SeqElement {
  std::vector<NCPoly> components;  // components[k-1] is the k-th entry
  friend bool operator==(const SeqElement&, const SeqElement&) = default;
};

/// Pointwise product on sequences truncated to N entries; R(y)_k = y_1 + ... + y_{k-1}.
/// Weight 1, unital, noncommutative. Entry k only depends on entries <= k, so
/// the truncation is an exact quotient.
class SequenceModel {
 public:
  using Element = SeqElement;

  explicit SequenceModel(int length);

  int length() const { return n_; }
  Rational weight() const { return Rational(1); }
  bool is_commutative() const { return false; }
  bool is_unital() const { return true; }
  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Rational& c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element apply_r(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const;
  std::string render(const Element& a) const;
  std::string name() const { return "sequence(N=" + std::to_string(n_) + ")"; }
  bool compatible(const Element& a) const { return static_cast<int>(a.components.size()) == n_; }

  /// Entry k is x_k of the given alphabet.
  Element generator_sequence(int alphabet) const;
  Element from_components(std::vector<NCPoly> comps) const;

 private:
  int n_;
};

/// Partial-sum operator on sequences; same as SequenceModel::apply_r.
SeqElement standard_r(const SequenceModel& m, const SeqElement& y);
/// (RX)^[n] (left) or (RX)^{n} (right) for X the generator sequence of `alphabet`.
enum class Bracket { Left, Right };
SeqElement rx_bracket(const SequenceModel& m, int n, Bracket variant, int alphabet = 0);

// ---------------------------------------------------------------------------

/// Laurent series in ε with R the projection onto strictly negative powers.
/// Idempotent, weight -1, commutative, unital.
class LaurentMSModel {
 public:
  using Element = LaurentSeries;

  Rational weight() const { return Rational(-1); }
  bool is_commutative() const { return true; }
  bool is_unital() const { return true; }
  Element zero() const { return {}; }
  Element one() const { return LaurentSeries(Rational(1)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element negate(const Element& a) const { return -a; }
  Element scale(const Rational& c, const Element& a) const { return c * a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element apply_r(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  std::string render(const Element& a) const { return a.to_string(); }
  std::string name() const { return "laurent-ms"; }
  bool compatible(const Element&) const { return true; }
};

/// Minimal-subtraction projection. Throws PreconditionError if the series is
/// truncated below ε^-1, since its pole part would then be unknown.
LaurentSeries ms_project(const LaurentSeries& x);

// ---------------------------------------------------------------------------

/// Polynomials in x with R(f) = ∫_0^x f. Weight 0, commutative, unital.
class PolyIntModel {
 public:
  using Element = UPoly;

  Rational weight() const { return Rational(0); }
  bool is_commutative() const { return true; }
  bool is_unital() const { return true; }
  Element zero() const { return {}; }
  Element one() const { return UPoly(Rational(1)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element negate(const Element& a) const { return -a; }
  Element scale(const Rational& c, const Element& a) const { return c * a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element apply_r(const Element& a) const { return a.integral(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  std::string render(const Element& a) const { return a.to_string(); }
  std::string name() const { return "polyint"; }
  bool compatible(const Element&) const { return true; }
};

// ---------------------------------------------------------------------------

struct PolyMatrix {
  int dim = 0;
  std::vector<UPoly> entries;  // row-major
  const UPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
  UPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

/// d×d matrices of polynomials, R integrating entrywise. Weight 0, unital,
/// noncommutative for d >= 2.
class MatrixPolyModel {
 public:
  using Element = PolyMatrix;

  explicit MatrixPolyModel(int dim = 2);

  int dim() const { return d_; }
  Rational weight() const { return Rational(0); }
  bool is_commutative() const { return d_ == 1; }
  bool is_unital() const { return true; }
  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Rational& c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element apply_r(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const;
  std::string render(const Element& a) const;
  std::string name() const { return "matrix(d=" + std::to_string(d_) + ")"; }
  bool compatible(const Element& a) const { return a.dim == d_ && static_cast<int>(a.entries.size()) == d_ * d_; }

 private:
  int d_;
};

// ---------------------------------------------------------------------------

struct Samples {
  std::vector<Rational> values;  // values[j-1] = f(j h), j = 1..M
  friend bool operator==(const Samples&, const Samples&) = default;
};

/// Functions tabulated on the grid h, 2h, ..., Mh with pointwise product and
/// the Riemann sum R_h(f)(jh) = h Σ_{n=1}^{j} f(nh) (weight -h), or, when
/// `shifted`, R'_h(f)(jh) = h Σ_{n=1}^{j-1} f(nh) (weight +h).
class RiemannModel {
 public:
  using Element = Samples;

  RiemannModel(Rational step, int points, bool shifted);

  const Rational& step() const { return h_; }
  int points() const { return m_; }
  bool shifted() const { return shifted_; }
  Rational weight() const { return shifted_ ? h_ : -h_; }
  bool is_commutative() const { return true; }
  bool is_unital() const { return true; }
  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Rational& c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element apply_r(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const;
  std::string render(const Element& a) const;
  std::string name() const;
  bool compatible(const Element& a) const { return static_cast<int>(a.values.size()) == m_; }

 private:
  Rational h_;
  int m_;
  bool shifted_;
};

static_assert(RotaBaxterModel<SequenceModel>);
static_assert(RotaBaxterModel<LaurentMSModel>);
static_assert(RotaBaxterModel<PolyIntModel>);
static_assert(RotaBaxterModel<MatrixPolyModel>);
static_assert(RotaBaxterModel<RiemannModel>);
static_assert(RotaBaxterModel<Rescaled<SequenceModel>>);
static_assert(RotaBaxterModel<DoubleProductModel<LaurentMSModel>>);

}  // namespace rbalg
