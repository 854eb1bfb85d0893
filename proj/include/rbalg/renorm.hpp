#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbalg/combinatorics.hpp"
#include "rbalg/hopf.hpp"
#include "rbalg/rb_models.hpp"

namespace rbalg {

/// Linear map H -> Laurent series in ε; a regularized character when multiplicative.
using LaurentMap = LinMap<LaurentMSModel>;

/// Lin(H, A) with the convolution product and R = ms_project applied pointwise.
/// A Rota-Baxter algebra of weight -1, noncommutative unless H is cocommutative.
class ConvolutionModel {
 public:
  using Element = LaurentMap;

  ConvolutionModel(HopfPtr h, int bound, int workers = 1);

  [[nodiscard]] const HopfPtr& hopf() const { return h_; }
  [[nodiscard]] int bound() const { return bound_; }

  Rational weight() const { return Rational(-1); }
  bool is_commutative() const { return h_->is_cocommutative(); }
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
  bool is_zero(const Element& a) const { return a.values().empty(); }
  std::string render(const Element& a) const;
  std::string name() const;
  bool compatible(const Element& a) const { return a.hopf() == h_ && a.bound() == bound_; }

 private:
  HopfPtr h_;
  int bound_;
  int workers_;
};

/// Largest pole order among the values on generators.
int max_generator_pole_depth(const LaurentMap& gamma);

struct BirkhoffPair {
  LaurentMap gamma_minus;
  LaurentMap gamma_plus;
  LaurentMap prepared;  // Bogoliubov's preparation bar γ
  bool minus_multiplicative = false;
  bool plus_multiplicative = false;
};

/// Bogoliubov's recursion, degree by degree on every basis element:
///   bar γ(x) = γ(x) + Σ γ_-(x')γ(x''), γ_- = -R(bar γ), γ_+ = bar γ - R(bar γ).
/// Multiplicativity of γ_± is checked afterwards and recorded, not assumed.
/// Requires a character with γ(1) = 1. Throws WindowOverflow when a value at
/// degree n has a pole deeper than n times the deepest generator pole.
BirkhoffPair bogoliubov(const LaurentMap& gamma, int workers = 1);

/// γ_- = e + Σ_n Σ_{I ⊨ n} ω(I) 𝔏^(i1)(a) ⋆ ... ⋆ 𝔏^(ik)(a) with a = e - γ,
/// evaluated in the convolution model grouped by the last part.
LaurentMap closed_counterterm(const LaurentMap& gamma, int workers = 1);

/// Coefficient of 𝔏^(k1)⋯𝔏^(kp) in Ω: Σ over compositions J coarser than K of
/// (-1)^{ℓ(J)-1}/ℓ(J) · ω(K, J).
Rational refinement_omega_coefficient(const Composition& k);

/// True when refinement_omega_coefficient agrees with the simplex/descent
/// coefficient for every composition of weight <= max_weight.
bool refinement_coefficients_match_simplex(int max_weight);

/// γ_- = exp⋆(Ω) with Ω = Σ_K refinement_omega_coefficient(K) 𝔏^(k1)(a) ⋆ ... ⋆ 𝔏^(kp)(a).
LaurentMap exp_counterterm(const LaurentMap& gamma, int workers = 1);

/// Constant ε-coefficient of γ_+ on every basis element up to the bound.
/// Throws PreconditionError if some value of γ_+ still has a pole.
std::map<Basis, Rational> renormalized_limit(const BirkhoffPair& pair);

struct DegreeBeta {
  int degree = 0;
  bool scalar_form = false;          // every value is c·ε^{-degree}
  std::map<Basis, Rational> coeffs;  // c per basis element when scalar_form holds
};

struct BetaReport {
  LaurentMap dynkin_minus;  // D(γ_-)
  bool reconstruction_holds = false;  // Γ(D(γ_-)) = γ_-
  std::vector<DegreeBeta> degrees;
};

BetaReport beta_report(const LaurentMap& gamma, int workers = 1);

/// Recomputes (γ_-, γ_+) from the Atkinson recursion F = 1 + R(F a), G = 1 + R̃(a G)
/// in the convolution model, with γ_- = F and γ_+ = G^{-1}, and compares with
/// Bogoliubov's recursion.
bool uniqueness_check(const LaurentMap& gamma, int workers = 1);

struct IngestedCharacter {
  HopfPtr hopf;
  LaurentMap gamma;
};

/// Reads {"hopf": "ladder"|"trees", "degree": N, "values": {gen: {exponent: "p/q"}}}
/// and extends the generator values multiplicatively. An optional "pole_depth"
/// limits poles to pole_depth·deg on each generator. Throws ParseError or WindowOverflow.
IngestedCharacter ingest_character_text(const std::string& text);
IngestedCharacter ingest_character(const std::string& path);

}  // namespace rbalg
