#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rbalg/rb_core.hpp"
#include "rbalg/rb_models.hpp"

namespace rbalg {

/// Coefficients of symbolic terms are polynomials in the weight θ.
using ThetaPoly = UPoly;
std::string render_theta_poly(const ThetaPoly& p);

struct Monomial;

/// Either a generator Z_gen (gen >= 1) or R applied to a monomial (gen == 0).
struct Factor {
  int gen = 0;
  std::shared_ptr<const Monomial> arg;
  [[nodiscard]] bool is_r() const { return gen == 0; }
};

/// Ordered product of factors; the empty product is the unit.
struct Monomial {
  std::vector<Factor> factors;
  [[nodiscard]] std::string key() const;
};

/// Finite sum of monomials with coefficients in Q[θ]; R is pushed through sums
/// by linearity, so every R-factor wraps a single monomial.
class RBTerm {
 public:
  struct Entry {
    Monomial mono;
    ThetaPoly coeff;
  };

  RBTerm() = default;
  static RBTerm generator(int index);  // Z_index, index >= 1
  static RBTerm constant(const ThetaPoly& c);
  static RBTerm theta();
  static RBTerm from_monomial(Monomial m, const ThetaPoly& c = ThetaPoly(Rational(1)));

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<std::string, Entry>& terms() const { return terms_; }
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] bool is_elementary() const;  // no two adjacent R-factors anywhere
  [[nodiscard]] int max_generator() const;

  RBTerm operator-() const;
  friend RBTerm operator+(const RBTerm& a, const RBTerm& b);
  friend RBTerm operator-(const RBTerm& a, const RBTerm& b);
  friend RBTerm operator*(const RBTerm& a, const RBTerm& b);  // distributes, no rewriting
  friend RBTerm operator*(const ThetaPoly& c, const RBTerm& a);
  [[nodiscard]] RBTerm apply_r() const;

  friend bool operator==(const RBTerm& a, const RBTerm& b);

  void add_entry(const Monomial& m, const ThetaPoly& c);

 private:
  std::map<std::string, Entry> terms_;
};

bool is_elementary(const Monomial& m);

/// Rewrites every adjacent pair R(c)R(d) into R(cR(d)) + R(R(c)d) + θR(cd),
/// leftmost-innermost first, until every monomial is elementary.
RBTerm normal_form(const RBTerm& t);

/// Parses prefix notation: sums with + and -, products with *, R(...),
/// generators Z1..Zn (X is an alias of Z1), rational scalars, `theta`, parentheses.
RBTerm parse_rb_term(std::string_view text);

/// The free algebra of terms as a Rota-Baxter model with symbolic weight. The
/// product only distributes; use normal_form to rewrite.
class TermModel {
 public:
  using Element = RBTerm;

  Rational weight() const { throw PreconditionError("the term model has a symbolic weight"); }
  bool is_commutative() const { return false; }
  bool is_unital() const { return true; }
  Element zero() const { return {}; }
  Element one() const { return RBTerm::constant(ThetaPoly(Rational(1))); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element negate(const Element& a) const { return -a; }
  Element scale(const Rational& c, const Element& a) const { return ThetaPoly(c) * a; }
  Element scale_by_weight(const Element& a) const { return RBTerm::theta() * a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element apply_r(const Element& a) const { return a.apply_r(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  std::string render(const Element& a) const { return a.to_string(); }
  std::string name() const { return "free-terms"; }
  bool compatible(const Element&) const { return true; }
};

static_assert(RotaBaxterModel<TermModel>);

/// Interprets a term in a concrete model: Z_i ↦ assignment[i], θ ↦ model weight.
/// Throws PreconditionError when a generator has no assigned value.
template <RotaBaxterModel M>
ElementOf<M> eval_term(const RBTerm& t, const M& m, const std::map<int, ElementOf<M>>& assignment) {
  std::unordered_map<std::string, ElementOf<M>> memo;
  auto theta = m.weight();
  std::function<ElementOf<M>(const Monomial&)> eval_mono = [&](const Monomial& mono) -> ElementOf<M> {
    auto key = mono.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ElementOf<M> acc = m.one();
    bool first = true;
    for (const auto& f : mono.factors) {
      ElementOf<M> v = [&] {
        if (f.is_r()) return m.apply_r(eval_mono(*f.arg));
        auto it = assignment.find(f.gen);
        if (it == assignment.end()) throw PreconditionError("no value assigned to Z" + std::to_string(f.gen));
        return it->second;
      }();
      acc = first ? v : m.mul(acc, v);
      first = false;
    }
    memo.emplace(key, acc);
    return acc;
  };
  ElementOf<M> total = m.zero();
  for (const auto& [key, e] : t.terms()) {
    Rational c;
    Rational power(1);
    for (const auto& k : e.coeff.coeffs()) {
      c += k * power;
      power *= theta;
    }
    if (!c.is_zero()) total = m.add(total, m.scale(c, eval_mono(e.mono)));
  }
  return total;
}

}  // namespace rbalg
