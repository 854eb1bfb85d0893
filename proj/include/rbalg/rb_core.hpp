#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "rbalg/errors.hpp"
#include "rbalg/rational.hpp"

namespace rbalg {

/// A concrete Rota-Baxter algebra: an associative algebra with a linear map R
/// and a weight θ, supposed to satisfy R(x)R(y) = R(R(x)y + xR(y) + θxy).
/// The relation itself is checked by check_rb, never assumed.
template <class M>
concept RotaBaxterModel = requires(const M& m, const typename M::Element& x, const Rational& c) {
  typename M::Element;
  { m.weight() } -> std::convertible_to<Rational>;
  { m.is_commutative() } -> std::convertible_to<bool>;
  { m.is_unital() } -> std::convertible_to<bool>;
  { m.zero() } -> std::same_as<typename M::Element>;
  { m.one() } -> std::same_as<typename M::Element>;  // throws PreconditionError when not unital
  { m.add(x, x) } -> std::same_as<typename M::Element>;
  { m.sub(x, x) } -> std::same_as<typename M::Element>;
  { m.negate(x) } -> std::same_as<typename M::Element>;
  { m.scale(c, x) } -> std::same_as<typename M::Element>;
  { m.mul(x, x) } -> std::same_as<typename M::Element>;
  { m.apply_r(x) } -> std::same_as<typename M::Element>;
  { m.equal(x, x) } -> std::convertible_to<bool>;
  { m.is_zero(x) } -> std::convertible_to<bool>;
  { m.render(x) } -> std::convertible_to<std::string>;
  { m.name() } -> std::convertible_to<std::string>;
  { m.compatible(x) } -> std::convertible_to<bool>;
};

template <RotaBaxterModel M>
using ElementOf = typename M::Element;

template <RotaBaxterModel M>
void require_compatible(const M& m, const ElementOf<M>& x) {
  if (!m.compatible(x)) throw ModelMismatch("element does not belong to model " + m.name());
}

template <RotaBaxterModel M>
ElementOf<M> sum(const M& m, const std::vector<ElementOf<M>>& xs) {
  ElementOf<M> s = m.zero();
  for (const auto& x : xs) s = m.add(s, x);
  return s;
}

/// θ·x. A model may provide scale_by_weight when its weight is symbolic.
template <RotaBaxterModel M>
ElementOf<M> times_weight(const M& m, const ElementOf<M>& x) {
  if constexpr (requires { m.scale_by_weight(x); }) {
    return m.scale_by_weight(x);
  } else {
    return m.scale(m.weight(), x);
  }
}

/// -θ·x.
template <RotaBaxterModel M>
ElementOf<M> times_minus_weight(const M& m, const ElementOf<M>& x) {
  return m.negate(times_weight(m, x));
}

template <RotaBaxterModel M>
ElementOf<M> commutator(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  return m.sub(m.mul(a, b), m.mul(b, a));
}

/// R̃ = -θ id - R, again a Rota-Baxter operator of weight θ.
template <RotaBaxterModel M>
ElementOf<M> tilde_r(const M& m, const ElementOf<M>& x) {
  return m.sub(times_minus_weight(m, x), m.apply_r(x));
}

/// R(x)R(y) - R(R(x)y + xR(y) + θxy).
template <RotaBaxterModel M>
ElementOf<M> check_rb(const M& m, const ElementOf<M>& x, const ElementOf<M>& y) {
  require_compatible(m, x);
  require_compatible(m, y);
  auto rx = m.apply_r(x), ry = m.apply_r(y);
  auto inner = m.add(m.add(m.mul(rx, y), m.mul(x, ry)), times_weight(m, m.mul(x, y)));
  return m.sub(m.mul(rx, ry), m.apply_r(inner));
}

/// x ∗ y = R(x)y + xR(y) + θxy.
template <RotaBaxterModel M>
ElementOf<M> double_product(const M& m, const ElementOf<M>& x, const ElementOf<M>& y) {
  require_compatible(m, x);
  require_compatible(m, y);
  return m.add(m.add(m.mul(m.apply_r(x), y), m.mul(x, m.apply_r(y))), times_weight(m, m.mul(x, y)));
}

/// a ▷ b = R(a)b - bR(a) - θba.
template <RotaBaxterModel M>
ElementOf<M> pre_lie_left(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  require_compatible(m, a);
  require_compatible(m, b);
  auto ra = m.apply_r(a);
  return m.sub(m.sub(m.mul(ra, b), m.mul(b, ra)), times_weight(m, m.mul(b, a)));
}

/// a ◁ b = aR(b) - R(b)a - θba.
template <RotaBaxterModel M>
ElementOf<M> pre_lie_right(const M& m, const ElementOf<M>& a, const ElementOf<M>& b) {
  require_compatible(m, a);
  require_compatible(m, b);
  auto rb = m.apply_r(b);
  return m.sub(m.sub(m.mul(a, rb), m.mul(rb, a)), times_weight(m, m.mul(b, a)));
}

/// (((a1 ▷ a2) ▷ a3) ... ) ▷ an.
template <RotaBaxterModel M>
ElementOf<M> iterated_left_word(const M& m, const std::vector<ElementOf<M>>& as) {
  if (as.empty()) throw PreconditionError("iterated pre-Lie word of no arguments");
  auto acc = as.front();
  for (std::size_t i = 1; i < as.size(); ++i) acc = pre_lie_left(m, acc, as[i]);
  return acc;
}

/// a1 ◁ (a2 ◁ ( ... ◁ an)).
template <RotaBaxterModel M>
ElementOf<M> iterated_right_word(const M& m, const std::vector<ElementOf<M>>& as) {
  if (as.empty()) throw PreconditionError("iterated pre-Lie word of no arguments");
  auto acc = as.back();
  for (std::size_t i = as.size() - 1; i-- > 0;) acc = pre_lie_right(m, as[i], acc);
  return acc;
}

/// [𝔩^(1)(a), ..., 𝔩^(n)(a)] with 𝔩^(k+1)(a) = 𝔩^(k)(a) ▷ a.
template <RotaBaxterModel M>
std::vector<ElementOf<M>> left_powers(const M& m, const ElementOf<M>& a, int n) {
  std::vector<ElementOf<M>> out;
  if (n < 1) return out;
  out.push_back(a);
  for (int k = 2; k <= n; ++k) out.push_back(pre_lie_left(m, out.back(), a));
  return out;
}

/// [𝔯^(1)(a), ..., 𝔯^(n)(a)] with 𝔯^(k+1)(a) = a ◁ 𝔯^(k)(a).
template <RotaBaxterModel M>
std::vector<ElementOf<M>> right_powers(const M& m, const ElementOf<M>& a, int n) {
  std::vector<ElementOf<M>> out;
  if (n < 1) return out;
  out.push_back(a);
  for (int k = 2; k <= n; ++k) out.push_back(pre_lie_right(m, a, out.back()));
  return out;
}

/// [𝔏^(1)(a), ..., 𝔏^(n)(a)] with 𝔏^(k) = R(𝔩^(k)(a)).
template <RotaBaxterModel M>
std::vector<ElementOf<M>> big_l_powers(const M& m, const ElementOf<M>& a, int n) {
  auto ls = left_powers(m, a, n);
  for (auto& x : ls) x = m.apply_r(x);
  return ls;
}

/// [(Ra)^[0], ..., (Ra)^[n]]: (Ra)^[0] = 1, (Ra)^[k+1] = R((Ra)^[k] a).
template <RotaBaxterModel M>
std::vector<ElementOf<M>> rx_left_brackets(const M& m, const ElementOf<M>& a, int n) {
  std::vector<ElementOf<M>> out{m.one()};
  for (int k = 1; k <= n; ++k) out.push_back(m.apply_r(m.mul(out.back(), a)));
  return out;
}

/// [(Ra)^{0}, ..., (Ra)^{n}]: (Ra)^{k+1} = R(a (Ra)^{k}).
template <RotaBaxterModel M>
std::vector<ElementOf<M>> rx_right_brackets(const M& m, const ElementOf<M>& a, int n) {
  std::vector<ElementOf<M>> out{m.one()};
  for (int k = 1; k <= n; ++k) out.push_back(m.apply_r(m.mul(a, out.back())));
  return out;
}

/// Same algebra with R replaced by μR; the weight becomes μθ.
template <RotaBaxterModel M>
class Rescaled {
 public:
  using Element = ElementOf<M>;

  Rescaled(M base, Rational mu) : base_(std::move(base)), mu_(std::move(mu)) {}

  const M& base() const { return base_; }
  const Rational& mu() const { return mu_; }
  Rational weight() const { return mu_ * base_.weight(); }
  bool is_commutative() const { return base_.is_commutative(); }
  bool is_unital() const { return base_.is_unital(); }
  Element zero() const { return base_.zero(); }
  Element one() const { return base_.one(); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return base_.sub(a, b); }
  Element negate(const Element& a) const { return base_.negate(a); }
  Element scale(const Rational& c, const Element& a) const { return base_.scale(c, a); }
  Element mul(const Element& a, const Element& b) const { return base_.mul(a, b); }
  Element apply_r(const Element& a) const { return base_.scale(mu_, base_.apply_r(a)); }
  bool equal(const Element& a, const Element& b) const { return base_.equal(a, b); }
  bool is_zero(const Element& a) const { return base_.is_zero(a); }
  std::string render(const Element& a) const { return base_.render(a); }
  std::string name() const { return base_.name() + " rescaled by " + mu_.to_string(); }
  bool compatible(const Element& a) const { return base_.compatible(a); }

 private:
  M base_;
  Rational mu_;
};

template <RotaBaxterModel M>
Rescaled<M> rescale(const M& m, const Rational& mu) {
  return Rescaled<M>(m, mu);
}

/// The same vector space with the double product ∗ as multiplication and the
/// same R; again Rota-Baxter of weight θ. Not unital in general.
template <RotaBaxterModel M>
class DoubleProductModel {
 public:
  using Element = ElementOf<M>;

  explicit DoubleProductModel(M base) : base_(std::move(base)) {}

  const M& base() const { return base_; }
  Rational weight() const { return base_.weight(); }
  bool is_commutative() const { return base_.is_commutative(); }
  bool is_unital() const { return false; }
  Element zero() const { return base_.zero(); }
  Element one() const { throw PreconditionError("double product algebra has no unit"); }
  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return base_.sub(a, b); }
  Element negate(const Element& a) const { return base_.negate(a); }
  Element scale(const Rational& c, const Element& a) const { return base_.scale(c, a); }
  Element mul(const Element& a, const Element& b) const { return double_product(base_, a, b); }
  Element apply_r(const Element& a) const { return base_.apply_r(a); }
  bool equal(const Element& a, const Element& b) const { return base_.equal(a, b); }
  bool is_zero(const Element& a) const { return base_.is_zero(a); }
  std::string render(const Element& a) const { return base_.render(a); }
  std::string name() const { return base_.name() + " with double product"; }
  bool compatible(const Element& a) const { return base_.compatible(a); }

 private:
  M base_;
};

}  // namespace rbalg
