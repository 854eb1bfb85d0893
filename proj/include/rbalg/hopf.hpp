#pragma once

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbalg/combinatorics.hpp"
#include "rbalg/errors.hpp"
#include "rbalg/parallel.hpp"
#include "rbalg/rational.hpp"

namespace rbalg {

enum class HopfKind { Ladder, Trees, Ncsf };

/// A monomial in the generators; empty is the unit. Generator ids are sorted
/// for the commutative instances and kept in order for NCSF.
struct Basis {
  std::vector<int> gens;
  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

struct CoproductTerm {
  Basis left;
  Basis right;
  Rational coeff;
};

/// Rooted tree with children in canonical order; "()" is the single vertex.
struct Tree {
  std::vector<Tree> children;
  [[nodiscard]] int size() const;
  [[nodiscard]] std::string to_string() const;
  static Tree parse(std::string_view text);  // throws ParseError
};

/// All trees of a forest string such as "() (())"; throws ParseError.
std::vector<Tree> parse_forest(std::string_view text);

/// Graded connected Hopf algebra that is free (NCSF) or free commutative (ladder,
/// rooted trees) on its generators. Generators of degree n:
///   ladder  t_n, Δ t_n = Σ_i t_i ⊗ t_{n-i};
///   NCSF    S_n, same coproduct, noncommutative product;
///   trees   rooted trees with n vertices, admissible-cut coproduct.
/// Trees are registered up to `max_degree` vertices.
class HopfAlgebra {
 public:
  static std::shared_ptr<const HopfAlgebra> ladder(int max_degree = 12);
  static std::shared_ptr<const HopfAlgebra> trees(int max_degree = 8);
  static std::shared_ptr<const HopfAlgebra> ncsf(int max_degree = 12);
  static std::shared_ptr<const HopfAlgebra> make(HopfKind kind, int max_degree);

  HopfAlgebra(HopfKind kind, int max_degree);

  [[nodiscard]] HopfKind kind() const { return kind_; }
  [[nodiscard]] std::string name() const;
  [[nodiscard]] int max_degree() const { return max_degree_; }
  [[nodiscard]] bool is_commutative() const { return kind_ != HopfKind::Ncsf; }
  [[nodiscard]] bool is_cocommutative() const { return kind_ != HopfKind::Trees; }

  [[nodiscard]] std::vector<int> generators(int degree) const;
  [[nodiscard]] int generator_degree(int gen) const;
  [[nodiscard]] std::string generator_name(int gen) const;
  /// Accepts "t3" (ladder), "S3" (NCSF) or a tree string; throws ParseError otherwise.
  [[nodiscard]] int find_generator(std::string_view name) const;

  [[nodiscard]] Basis unit() const { return {}; }
  [[nodiscard]] Basis generator_basis(int gen) const { return Basis{{gen}}; }
  [[nodiscard]] int degree(const Basis& b) const;
  [[nodiscard]] std::vector<Basis> basis(int degree) const;
  [[nodiscard]] std::vector<Basis> basis_up_to(int max_degree) const;
  [[nodiscard]] Basis product(const Basis& a, const Basis& b) const;
  [[nodiscard]] std::vector<CoproductTerm> coproduct(const Basis& b) const;  // memoized, thread-safe
  [[nodiscard]] std::string render(const Basis& b) const;

 private:
  std::vector<CoproductTerm> generator_coproduct(int gen) const;
  void check_degree(int degree) const;

  HopfKind kind_;
  int max_degree_;
  std::vector<std::string> tree_names_;  // by id
  std::vector<int> tree_degrees_;
  std::map<std::string, int, std::less<>> tree_ids_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Basis, std::vector<CoproductTerm>> memo_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Finite linear combination of basis elements.
class HopfElement {
 public:
  HopfElement() = default;
  explicit HopfElement(const Basis& b, const Rational& c = Rational(1));

  [[nodiscard]] const std::map<Basis, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coeff(const Basis& b) const;
  void add_term(const Basis& b, const Rational& c);

  friend HopfElement operator+(const HopfElement& a, const HopfElement& b);
  friend HopfElement operator-(const HopfElement& a, const HopfElement& b);
  friend HopfElement operator*(const Rational& c, const HopfElement& a);
  friend bool operator==(const HopfElement&, const HopfElement&) = default;

 private:
  std::map<Basis, Rational> terms_;
};

/// The Hopf algebra itself as a target algebra, for endomorphisms such as S, Y and D.
class HopfTarget {
 public:
  using Element = HopfElement;
  explicit HopfTarget(HopfPtr h) : h_(std::move(h)) {}
  [[nodiscard]] const HopfPtr& hopf() const { return h_; }
  Element zero() const { return {}; }
  Element one() const { return HopfElement(Basis{}); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element scale(const Rational& c, const Element& a) const { return c * a; }
  Element mul(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  std::string render(const Element& a) const;

 private:
  HopfPtr h_;
};

/// Commutative or noncommutative unital algebra receiving linear maps out of H.
template <class A>
concept TargetAlgebra = requires(const A& a, const typename A::Element& x, const Rational& c) {
  typename A::Element;
  { a.zero() } -> std::same_as<typename A::Element>;
  { a.one() } -> std::same_as<typename A::Element>;
  { a.add(x, x) } -> std::same_as<typename A::Element>;
  { a.sub(x, x) } -> std::same_as<typename A::Element>;
  { a.scale(c, x) } -> std::same_as<typename A::Element>;
  { a.mul(x, x) } -> std::same_as<typename A::Element>;
  { a.equal(x, x) } -> std::convertible_to<bool>;
  { a.is_zero(x) } -> std::convertible_to<bool>;
  { a.render(x) } -> std::convertible_to<std::string>;
};

/// Linear map H -> A known on all basis elements of degree <= bound; absent entries are zero.
template <TargetAlgebra A>
class LinMap {
 public:
  using Element = typename A::Element;

  LinMap(HopfPtr h, A target, int bound) : h_(std::move(h)), target_(std::move(target)), bound_(bound) {
    if (bound_ < 0 || bound_ > h_->max_degree()) throw PreconditionError("degree bound outside the Hopf algebra range");
  }

  [[nodiscard]] const HopfPtr& hopf() const { return h_; }
  [[nodiscard]] const A& target() const { return target_; }
  [[nodiscard]] int bound() const { return bound_; }
  [[nodiscard]] const std::map<Basis, Element>& values() const { return values_; }

  Element operator()(const Basis& b) const {
    auto it = values_.find(b);
    if (it != values_.end()) return it->second;
    if (h_->degree(b) > bound_) throw PreconditionError("basis element above the degree bound");
    return target_.zero();
  }

  void set(const Basis& b, Element v) {
    if (target_.is_zero(v)) values_.erase(b);
    else values_.insert_or_assign(b, std::move(v));
  }

  Element apply(const HopfElement& x) const {
    Element out = target_.zero();
    for (const auto& [b, c] : x.terms()) out = target_.add(out, target_.scale(c, (*this)(b)));
    return out;
  }

  friend bool operator==(const LinMap& f, const LinMap& g) {
    if (f.h_ != g.h_ || f.bound_ != g.bound_ || f.values_.size() != g.values_.size()) return false;
    for (auto i = f.values_.begin(), j = g.values_.begin(); i != f.values_.end(); ++i, ++j) {
      if (i->first != j->first || !f.target_.equal(i->second, j->second)) return false;
    }
    return true;
  }

 private:
  HopfPtr h_;
  A target_;
  int bound_;
  std::map<Basis, Element> values_;
};

namespace detail {

template <TargetAlgebra A>
void require_same_domain(const LinMap<A>& f, const LinMap<A>& g) {
  if (f.hopf() != g.hopf() || f.bound() != g.bound()) throw ModelMismatch("linear maps live on different Hopf algebras or degree bounds");
}

template <TargetAlgebra A>
void require_unit_value(const LinMap<A>& f, bool one) {
  const auto& a = f.target();
  auto v = f(Basis{});
  bool ok = one ? a.equal(v, a.one()) : a.is_zero(v);
  if (!ok) throw PreconditionError(one ? "linear map must send the unit to 1" : "linear map must vanish on the unit");
}

}  // namespace detail

/// Unit of the convolution algebra: 1 on the unit of H, 0 elsewhere.
template <TargetAlgebra A>
LinMap<A> counit_map(const HopfPtr& h, const A& target, int bound) {
  LinMap<A> e(h, target, bound);
  e.set(Basis{}, target.one());
  return e;
}

template <TargetAlgebra A>
LinMap<A> zero_map(const HopfPtr& h, const A& target, int bound) {
  return LinMap<A>(h, target, bound);
}

/// Algebra morphism determined by its values on generators; missing generators map to 0.
template <TargetAlgebra A>
LinMap<A> character_from_generators(const HopfPtr& h, const A& target, int bound,
                                    const std::map<int, typename A::Element>& generator_values) {
  LinMap<A> f(h, target, bound);
  for (const auto& b : h->basis_up_to(bound)) {
    auto v = target.one();
    for (int g : b.gens) {
      auto it = generator_values.find(g);
      v = it == generator_values.end() ? target.zero() : target.mul(v, it->second);
    }
    f.set(b, std::move(v));
  }
  return f;
}

template <TargetAlgebra A>
LinMap<A> add(const LinMap<A>& f, const LinMap<A>& g) {
  detail::require_same_domain(f, g);
  LinMap<A> out = f;
  for (const auto& [b, v] : g.values()) out.set(b, f.target().add(f(b), v));
  return out;
}

template <TargetAlgebra A>
LinMap<A> sub(const LinMap<A>& f, const LinMap<A>& g) {
  detail::require_same_domain(f, g);
  LinMap<A> out = f;
  for (const auto& [b, v] : g.values()) out.set(b, f.target().sub(f(b), v));
  return out;
}

template <TargetAlgebra A>
LinMap<A> scale(const Rational& c, const LinMap<A>& f) {
  LinMap<A> out(f.hopf(), f.target(), f.bound());
  for (const auto& [b, v] : f.values()) out.set(b, f.target().scale(c, v));
  return out;
}

/// Applies `fn(basis, value)` to every stored value.
template <TargetAlgebra A, class Fn>
LinMap<A> map_values(const LinMap<A>& f, Fn fn) {
  LinMap<A> out(f.hopf(), f.target(), f.bound());
  for (const auto& [b, v] : f.values()) out.set(b, fn(b, v));
  return out;
}

/// f ⋆ g = m_A (f ⊗ g) Δ on every basis element up to the bound.
template <TargetAlgebra A>
LinMap<A> convolution(const LinMap<A>& f, const LinMap<A>& g, int workers = 1) {
  detail::require_same_domain(f, g);
  const auto& h = f.hopf();
  const auto& a = f.target();
  auto basis = h->basis_up_to(f.bound());
  auto vals = parallel_map<typename A::Element>(basis.size(), workers, [&](std::size_t i) {
    auto acc = a.zero();
    for (const auto& t : h->coproduct(basis[i])) {
      auto fl = f(t.left);
      if (a.is_zero(fl)) continue;
      auto gr = g(t.right);
      if (a.is_zero(gr)) continue;
      acc = a.add(acc, a.scale(t.coeff, a.mul(fl, gr)));
    }
    return acc;
  });
  LinMap<A> out(h, a, f.bound());
  for (std::size_t i = 0; i < basis.size(); ++i) out.set(basis[i], std::move(vals[i]));
  return out;
}

/// f^{⋆-1} by the degree recursion g(x) = -Σ_{deg x'' > 0} g(x') f(x''); requires f(1) = 1.
template <TargetAlgebra A>
LinMap<A> conv_inverse(const LinMap<A>& f) {
  detail::require_unit_value(f, true);
  const auto& h = f.hopf();
  const auto& a = f.target();
  LinMap<A> g(h, a, f.bound());
  g.set(Basis{}, a.one());
  for (int d = 1; d <= f.bound(); ++d) {
    for (const auto& b : h->basis(d)) {
      auto acc = a.zero();
      for (const auto& t : h->coproduct(b)) {
        if (t.right.gens.empty()) continue;
        acc = a.add(acc, a.scale(t.coeff, a.mul(g(t.left), f(t.right))));
      }
      g.set(b, a.scale(Rational(-1), acc));
    }
  }
  return g;
}

/// Σ_k f^{⋆k}/k!; requires f(1) = 0, so the sum stops at k = bound.
template <TargetAlgebra A>
LinMap<A> conv_exp(const LinMap<A>& f, int workers = 1) {
  detail::require_unit_value(f, false);
  auto e = counit_map(f.hopf(), f.target(), f.bound());
  auto out = e, power = e;
  for (int k = 1; k <= f.bound(); ++k) {
    power = convolution(power, f, workers);
    out = add(out, scale(Rational(1) / factorial(k), power));
  }
  return out;
}

/// Σ_k (-1)^{k+1} (f - e)^{⋆k} / k; requires f(1) = 1.
template <TargetAlgebra A>
LinMap<A> conv_log(const LinMap<A>& f, int workers = 1) {
  detail::require_unit_value(f, true);
  auto e = counit_map(f.hopf(), f.target(), f.bound());
  auto x = sub(f, e);
  auto out = zero_map(f.hopf(), f.target(), f.bound());
  auto power = e;
  for (int k = 1; k <= f.bound(); ++k) {
    power = convolution(power, x, workers);
    out = add(out, scale(Rational(k % 2 ? 1 : -1, k), power));
  }
  return out;
}

/// f∘Y: values on degree-n basis elements multiplied by n.
template <TargetAlgebra A>
LinMap<A> graded(const LinMap<A>& f) {
  const auto& h = f.hopf();
  return map_values(f, [&](const Basis& b, const typename A::Element& v) { return f.target().scale(Rational(h->degree(b)), v); });
}

/// Restriction to basis elements of one degree.
template <TargetAlgebra A>
LinMap<A> degree_component(const LinMap<A>& f, int degree) {
  LinMap<A> out(f.hopf(), f.target(), f.bound());
  for (const auto& [b, v] : f.values()) {
    if (f.hopf()->degree(b) == degree) out.set(b, v);
  }
  return out;
}

/// f^{⋆-1} ⋆ (f∘Y); for a character this is the Dynkin image of f. Requires f(1) = 1.
template <TargetAlgebra A>
LinMap<A> dynkin(const LinMap<A>& f, int workers = 1) {
  detail::require_unit_value(f, true);
  return convolution(conv_inverse(f), graded(f), workers);
}

/// Γ(h) = Σ_n Σ_{I ⊨ n} ω(I) h_{i1} ⋆ ... ⋆ h_{ik}, evaluated grouped by the last part:
/// Γ_n = (1/n) Σ_k Γ_{n-k} ⋆ h_k with Γ_0 = e. Requires h(1) = 0.
template <TargetAlgebra A>
LinMap<A> gamma_reconstruct(const LinMap<A>& h, int workers = 1) {
  detail::require_unit_value(h, false);
  const int bound = h.bound();
  std::vector<LinMap<A>> parts, gammas;
  for (int k = 0; k <= bound; ++k) parts.push_back(degree_component(h, k));
  gammas.push_back(counit_map(h.hopf(), h.target(), bound));
  auto out = gammas.front();
  for (int n = 1; n <= bound; ++n) {
    auto acc = zero_map(h.hopf(), h.target(), bound);
    for (int k = 1; k <= n; ++k) acc = add(acc, convolution(gammas[static_cast<std::size_t>(n - k)], parts[static_cast<std::size_t>(k)], workers));
    gammas.push_back(scale(Rational(1, n), acc));
    out = add(out, gammas.back());
  }
  return out;
}

/// (f∘φ)(x) = f(φ(x)) for an endomorphism φ of H.
template <TargetAlgebra A>
LinMap<A> compose(const LinMap<A>& f, const LinMap<HopfTarget>& phi) {
  if (f.hopf() != phi.hopf() || f.bound() != phi.bound()) throw ModelMismatch("composition across different Hopf algebras");
  LinMap<A> out(f.hopf(), f.target(), f.bound());
  for (const auto& b : f.hopf()->basis_up_to(f.bound())) out.set(b, f.apply(phi(b)));
  return out;
}

/// True when f(xy) = f(x) f(y) on every basis product up to the bound and f(1) = 1.
template <TargetAlgebra A>
bool is_multiplicative(const LinMap<A>& f) {
  const auto& a = f.target();
  if (!a.equal(f(Basis{}), a.one())) return false;
  for (const auto& b : f.hopf()->basis_up_to(f.bound())) {
    if (b.gens.size() < 2) continue;
    auto v = a.one();
    for (int g : b.gens) v = a.mul(v, f(Basis{{g}}));
    if (!a.equal(v, f(b))) return false;
  }
  return true;
}

/// True when f vanishes on the unit and on every product of two or more generators.
template <TargetAlgebra A>
bool is_infinitesimal(const LinMap<A>& f) {
  for (const auto& [b, v] : f.values()) {
    if (b.gens.size() != 1) return false;
  }
  return true;
}

LinMap<HopfTarget> identity_map(const HopfPtr& h, int bound);
LinMap<HopfTarget> grading_map(const HopfPtr& h, int bound);
/// S as id^{⋆-1} in End(H).
LinMap<HopfTarget> antipode_map(const HopfPtr& h, int bound);
/// D = S ⋆ Y in End(H).
LinMap<HopfTarget> dynkin_operator(const HopfPtr& h, int bound);
HopfElement antipode(const HopfPtr& h, const HopfElement& x);

/// Same Γ with one convolution chain per composition; used to validate the grouped form.
template <TargetAlgebra A>
LinMap<A> gamma_reconstruct_direct(const LinMap<A>& h) {
  detail::require_unit_value(h, false);
  const int bound = h.bound();
  std::vector<LinMap<A>> parts;
  for (int k = 0; k <= bound; ++k) parts.push_back(degree_component(h, k));
  auto out = counit_map(h.hopf(), h.target(), bound);
  for (int n = 1; n <= bound; ++n) {
    for (const auto& c : enumerate_compositions(n)) {
      auto chain = parts[static_cast<std::size_t>(c[0])];
      for (int i = 1; i < c.length(); ++i) chain = convolution(chain, parts[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])]);
      out = add(out, scale(omega_composition(c), chain));
    }
  }
  return out;
}

}  // namespace rbalg
