#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rbalg/combinatorics.hpp"
#include "rbalg/rb_core.hpp"

namespace rbalg {

/// Power series Σ_{n=0}^{N} c_n t^n with coefficients in a Rota-Baxter model;
/// products are truncated at t^N.
template <RotaBaxterModel M>
struct RBSeries {
  M model;
  std::vector<ElementOf<M>> coeffs;  // size N+1

  [[nodiscard]] int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const ElementOf<M>& operator[](int n) const { return coeffs[static_cast<std::size_t>(n)]; }
  ElementOf<M>& operator[](int n) { return coeffs[static_cast<std::size_t>(n)]; }
};

template <RotaBaxterModel M>
RBSeries<M> series_zero(const M& m, int order) {
  return RBSeries<M>{m, std::vector<ElementOf<M>>(static_cast<std::size_t>(order) + 1, m.zero())};
}

template <RotaBaxterModel M>
RBSeries<M> series_one(const M& m, int order) {
  auto s = series_zero(m, order);
  s[0] = m.one();
  return s;
}

template <RotaBaxterModel M>
void require_same_order(const RBSeries<M>& a, const RBSeries<M>& b) {
  if (a.order() != b.order()) throw ModelMismatch("series truncation orders differ");
}

template <RotaBaxterModel M>
RBSeries<M> series_add(const RBSeries<M>& a, const RBSeries<M>& b) {
  require_same_order(a, b);
  auto s = a;
  for (int n = 0; n <= a.order(); ++n) s[n] = a.model.add(a[n], b[n]);
  return s;
}

template <RotaBaxterModel M>
RBSeries<M> series_sub(const RBSeries<M>& a, const RBSeries<M>& b) {
  require_same_order(a, b);
  auto s = a;
  for (int n = 0; n <= a.order(); ++n) s[n] = a.model.sub(a[n], b[n]);
  return s;
}

template <RotaBaxterModel M>
RBSeries<M> series_scale(const Rational& c, const RBSeries<M>& a) {
  auto s = a;
  for (auto& x : s.coeffs) x = a.model.scale(c, x);
  return s;
}

template <RotaBaxterModel M>
RBSeries<M> series_mul(const RBSeries<M>& a, const RBSeries<M>& b) {
  require_same_order(a, b);
  const M& m = a.model;
  auto s = series_zero(m, a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (m.is_zero(a[i])) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (m.is_zero(b[j])) continue;
      s[i + j] = m.add(s[i + j], m.mul(a[i], b[j]));
    }
  }
  return s;
}

template <RotaBaxterModel M>
RBSeries<M> series_commutator(const RBSeries<M>& a, const RBSeries<M>& b) {
  return series_sub(series_mul(a, b), series_mul(b, a));
}

template <RotaBaxterModel M>
bool series_equal(const RBSeries<M>& a, const RBSeries<M>& b) {
  if (a.order() != b.order()) return false;
  for (int n = 0; n <= a.order(); ++n) {
    if (!a.model.equal(a[n], b[n])) return false;
  }
  return true;
}

/// First n with a_n != b_n, or -1.
template <RotaBaxterModel M>
int series_first_difference(const RBSeries<M>& a, const RBSeries<M>& b) {
  for (int n = 0; n <= std::min(a.order(), b.order()); ++n) {
    if (!a.model.equal(a[n], b[n])) return n;
  }
  return a.order() == b.order() ? -1 : std::min(a.order(), b.order()) + 1;
}

template <RotaBaxterModel M>
void require_constant_term(const RBSeries<M>& s, bool one, const char* what) {
  const M& m = s.model;
  bool ok = one ? m.equal(s[0], m.one()) : m.is_zero(s[0]);
  if (!ok) throw PreconditionError(std::string(what) + " needs constant term " + (one ? "1" : "0"));
}

/// Inverse of a series with constant term 1.
template <RotaBaxterModel M>
RBSeries<M> series_inverse(const RBSeries<M>& s) {
  require_constant_term(s, true, "series_inverse");
  const M& m = s.model;
  auto inv = series_one(m, s.order());
  for (int n = 1; n <= s.order(); ++n) {
    auto acc = m.zero();
    for (int k = 1; k <= n; ++k) acc = m.add(acc, m.mul(s[k], inv[n - k]));
    inv[n] = m.negate(acc);
  }
  return inv;
}

/// exp(s) = Σ s^k / k! for s with zero constant term.
template <RotaBaxterModel M>
RBSeries<M> series_exp(const RBSeries<M>& s) {
  require_constant_term(s, false, "series_exp");
  auto result = series_one(s.model, s.order());
  auto power = series_one(s.model, s.order());
  for (int k = 1; k <= s.order(); ++k) {
    power = series_scale(Rational(1, k), series_mul(power, s));
    result = series_add(result, power);
  }
  return result;
}

/// log(s) = Σ (-1)^{k-1} (s-1)^k / k for s with constant term 1.
template <RotaBaxterModel M>
RBSeries<M> series_log(const RBSeries<M>& s) {
  require_constant_term(s, true, "series_log");
  auto u = s;
  u[0] = s.model.zero();
  auto result = series_zero(s.model, s.order());
  auto power = series_one(s.model, s.order());
  for (int k = 1; k <= s.order(); ++k) {
    power = series_mul(power, u);
    result = series_add(result, series_scale(Rational(k % 2 ? 1 : -1, k), power));
  }
  return result;
}

template <RotaBaxterModel M>
void require_unital(const M& m) {
  if (!m.is_unital()) throw PreconditionError("model " + m.name() + " is not unital");
}

/// F_n = (Ra)^[n], the solution of F = 1 + tR(F a).
template <RotaBaxterModel M>
RBSeries<M> atkinson_F(const M& m, const ElementOf<M>& a, int order) {
  require_unital(m);
  return RBSeries<M>{m, rx_left_brackets(m, a, order)};
}

/// G_n = (R̃a)^{n}, the solution of G = 1 + tR̃(a G).
template <RotaBaxterModel M>
RBSeries<M> atkinson_G(const M& m, const ElementOf<M>& a, int order) {
  require_unital(m);
  auto g = series_one(m, order);
  for (int n = 1; n <= order; ++n) g[n] = tilde_r(m, m.mul(a, g[n - 1]));
  return g;
}

/// 1 + a θ t.
template <RotaBaxterModel M>
RBSeries<M> one_plus_weighted(const M& m, const ElementOf<M>& a, int order) {
  auto s = series_one(m, order);
  if (order >= 1) s[1] = times_weight(m, a);
  return s;
}

/// F (1 + aθt) G - 1; zero when the factorization holds to the given order.
template <RotaBaxterModel M>
RBSeries<M> atkinson_factorization_residual(const M& m, const ElementOf<M>& a, int order) {
  auto f = atkinson_F(m, a, order);
  auto g = atkinson_G(m, a, order);
  return series_sub(series_mul(series_mul(f, one_plus_weighted(m, a, order)), g), series_one(m, order));
}

/// (F^{-1}, G^{-1}) from F^{-1} = 1 - tR(aG) and G^{-1} = 1 - tR̃(Fa).
template <RotaBaxterModel M>
std::pair<RBSeries<M>, RBSeries<M>> atkinson_inverses(const M& m, const ElementOf<M>& a, int order) {
  auto f = atkinson_F(m, a, order);
  auto g = atkinson_G(m, a, order);
  auto finv = series_one(m, order);
  auto ginv = series_one(m, order);
  for (int n = 1; n <= order; ++n) {
    finv[n] = m.negate(m.apply_r(m.mul(a, g[n - 1])));
    ginv[n] = m.negate(tilde_r(m, m.mul(f[n - 1], a)));
  }
  return {finv, ginv};
}

/// Right-hand side of the classical Spitzer identity in a commutative model:
/// exp(θ^{-1} R(log(1 + aθt))) for θ != 0, exp(t R(a)) for θ = 0.
template <RotaBaxterModel M>
RBSeries<M> classical_spitzer_rhs(const M& m, const ElementOf<M>& a, int order) {
  if (!m.is_commutative()) throw PreconditionError("classical Spitzer identity needs a commutative model");
  require_unital(m);
  Rational theta = m.weight();
  auto exponent = series_zero(m, order);
  if (theta.is_zero()) {
    if (order >= 1) exponent[1] = m.apply_r(a);
  } else {
    // log(1 + aθt) = Σ (-1)^{n-1} (aθ)^n t^n / n
    auto power = m.one();
    for (int n = 1; n <= order; ++n) {
      power = m.mul(power, m.scale(theta, a));
      exponent[n] = m.scale(Rational(n % 2 ? 1 : -1, n) / theta, m.apply_r(power));
    }
  }
  return series_exp(exponent);
}

/// L̂(t) = Σ_{n>0} 𝔏^(n)(a) t^{n-1}, truncated at t^order.
template <RotaBaxterModel M>
RBSeries<M> magnus_generator(const M& m, const ElementOf<M>& a, int order) {
  auto ls = big_l_powers(m, a, order + 1);
  auto s = series_zero(m, order);
  for (int n = 0; n <= order; ++n) s[n] = ls[static_cast<std::size_t>(n)];
  return s;
}

/// Ω solving Ω' = L̂ + Σ_{n>0} (-1)^n b_n ad_Ω^n(L̂), Ω(0) = 0, iterated to a
/// fixpoint. Each pass fixes one more order, so order+1 passes suffice.
/// Returns Ω together with the number of passes that changed something.
template <RotaBaxterModel M>
std::pair<RBSeries<M>, int> magnus_omega_recursive_counted(const M& m, const ElementOf<M>& a, int order) {
  require_unital(m);
  auto lhat = magnus_generator(m, a, order);
  auto omega = series_zero(m, order);
  int passes = 0;
  for (int iter = 0; iter <= order + 1; ++iter) {
    auto integrand = lhat;
    auto ad = lhat;
    for (int n = 1; n <= order; ++n) {
      ad = series_commutator(omega, ad);
      Rational b = bernoulli_fraction(n);
      if (b.is_zero()) continue;
      integrand = series_add(integrand, series_scale(n % 2 ? -b : b, ad));
    }
    auto next = series_zero(m, order);
    for (int n = 0; n < order; ++n) next[n + 1] = m.scale(Rational(1, n + 1), integrand[n]);
    if (series_equal(next, omega)) break;
    omega = std::move(next);
    ++passes;
  }
  return {omega, passes};
}

template <RotaBaxterModel M>
RBSeries<M> magnus_omega_recursive(const M& m, const ElementOf<M>& a, int order) {
  return magnus_omega_recursive_counted(m, a, order).first;
}

/// Coefficient c(I) of 𝔏^(i1)⋯𝔏^(im) in Ω_{|I|}:
///   Σ_{σ∈S_m} (-1)^{d(σ)} / (m C(m-1, d(σ))) ∫_{simplex} Π_j t_{σ(m+1-j)}^{i_j - 1},
/// the j-th factor from the left sitting at time t_{σ(m+1-j)}.
/// With `leading_factor` the result is multiplied by |I|; that variant does not
/// satisfy exp(Ω) = F and is kept only to demonstrate this.
inline Rational strichartz_coefficient(const Composition& composition, bool leading_factor = false) {
  const auto& parts = composition.parts();
  int m = composition.length();
  Rational total;
  for (const auto& sigma : enumerate_permutations(m)) {
    int d = descent_count(sigma);
    std::vector<int> exponents(static_cast<std::size_t>(m), 0);
    for (int j = 1; j <= m; ++j) exponents[static_cast<std::size_t>(sigma(m + 1 - j) - 1)] = parts[static_cast<std::size_t>(j - 1)] - 1;
    Rational w = Rational(d % 2 ? -1 : 1) / (Rational(m) * binomial(m - 1, d));
    total += w * simplex_monomial_integral(exponents);
  }
  if (leading_factor) total *= Rational(composition.weight());
  return total;
}

/// Table c(I) for every composition I of weight <= max_weight, in enumeration order.
inline std::vector<std::pair<Composition, Rational>> strichartz_table(int max_weight, bool leading_factor = false) {
  std::vector<std::pair<Composition, Rational>> table;
  for (int k = 1; k <= max_weight; ++k) {
    for (const auto& c : enumerate_compositions(k)) table.emplace_back(c, strichartz_coefficient(c, leading_factor));
  }
  return table;
}

/// Ω_k = Σ_{I ⊨ k} c(I) 𝔏^(i1)⋯𝔏^(im).
template <RotaBaxterModel M>
RBSeries<M> magnus_omega_strichartz(const M& m, const ElementOf<M>& a, int order, bool leading_factor = false) {
  require_unital(m);
  auto ls = big_l_powers(m, a, order);
  auto omega = series_zero(m, order);
  for (int k = 1; k <= order; ++k) {
    for (const auto& comp : enumerate_compositions(k)) {
      Rational c = strichartz_coefficient(comp, leading_factor);
      if (c.is_zero()) continue;
      auto prod = ls[static_cast<std::size_t>(comp[0] - 1)];
      for (int j = 1; j < comp.length(); ++j) prod = m.mul(prod, ls[static_cast<std::size_t>(comp[static_cast<std::size_t>(j)] - 1)]);
      omega[k] = m.add(omega[k], m.scale(c, prod));
    }
  }
  return omega;
}

/// log of the Atkinson series F; the reference route for Ω.
template <RotaBaxterModel M>
RBSeries<M> magnus_omega_from_log(const M& m, const ElementOf<M>& a, int order) {
  return series_log(atkinson_F(m, a, order));
}

}  // namespace rbalg
