#include "rbalg/renorm.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "rbalg/parallel.hpp"
#include "rbalg/series.hpp"

namespace rbalg {

ConvolutionModel::ConvolutionModel(HopfPtr h, int bound, int workers) : h_(std::move(h)), bound_(bound), workers_(workers) {
  if (!h_) throw PreconditionError("convolution model needs a Hopf algebra");
  if (bound_ < 0 || bound_ > h_->max_degree()) throw PreconditionError("degree bound outside the Hopf algebra range");
}

LaurentMap ConvolutionModel::zero() const { return zero_map(h_, LaurentMSModel{}, bound_); }
LaurentMap ConvolutionModel::one() const { return counit_map(h_, LaurentMSModel{}, bound_); }

LaurentMap ConvolutionModel::add(const Element& a, const Element& b) const { return rbalg::add(a, b); }
LaurentMap ConvolutionModel::sub(const Element& a, const Element& b) const { return rbalg::sub(a, b); }
LaurentMap ConvolutionModel::negate(const Element& a) const { return rbalg::scale(Rational(-1), a); }
LaurentMap ConvolutionModel::scale(const Rational& c, const Element& a) const { return rbalg::scale(c, a); }
LaurentMap ConvolutionModel::mul(const Element& a, const Element& b) const { return convolution(a, b, workers_); }

LaurentMap ConvolutionModel::apply_r(const Element& a) const {
  return map_values(a, [](const Basis&, const LaurentSeries& v) { return ms_project(v); });
}

std::string ConvolutionModel::render(const Element& a) const {
  if (a.values().empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [b, v] : a.values()) {
    if (!first) out += ", ";
    first = false;
    out += h_->render(b) + ": " + v.to_string();
  }
  return out + "}";
}

std::string ConvolutionModel::name() const { return "convolution(" + h_->name() + ",N=" + std::to_string(bound_) + ")"; }

int max_generator_pole_depth(const LaurentMap& gamma) {
  int depth = 0;
  for (const auto& [b, v] : gamma.values()) {
    if (b.gens.size() == 1) depth = std::max(depth, v.pole_order());
  }
  return depth;
}

namespace {

void require_character(const LaurentMap& gamma) {
  if (!is_multiplicative(gamma)) throw PreconditionError("regularized character must be multiplicative with value 1 on the unit");
}

void check_window(const HopfAlgebra& h, const Basis& b, const LaurentSeries& v, int depth) {
  int allowed = h.degree(b) * depth;
  if (v.pole_order() > allowed) {
    throw WindowOverflow("pole of order " + std::to_string(v.pole_order()) + " on " + h.render(b) + " exceeds the window " + std::to_string(allowed));
  }
}

LaurentMap unit_minus(const LaurentMap& gamma) {
  return sub(counit_map(gamma.hopf(), gamma.target(), gamma.bound()), gamma);
}

}  // namespace

BirkhoffPair bogoliubov(const LaurentMap& gamma, int workers) {
  require_character(gamma);
  const auto& h = gamma.hopf();
  const int bound = gamma.bound();
  const int depth = max_generator_pole_depth(gamma);
  LaurentMSModel a;
  BirkhoffPair pair{counit_map(h, a, bound), counit_map(h, a, bound), counit_map(h, a, bound)};
  for (int d = 1; d <= bound; ++d) {
    auto basis = h->basis(d);
    auto prepared = parallel_map<LaurentSeries>(basis.size(), workers, [&](std::size_t i) {
      LaurentSeries acc;
      for (const auto& t : h->coproduct(basis[i])) {
        if (t.right.gens.empty()) continue;
        auto right = gamma(t.right);
        if (right.is_zero()) continue;
        acc += t.coeff * (pair.gamma_minus(t.left) * right);
      }
      return acc;
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      check_window(*h, basis[i], prepared[i], depth);
      auto pole = ms_project(prepared[i]);
      pair.gamma_minus.set(basis[i], -pole);
      pair.gamma_plus.set(basis[i], prepared[i] - pole);
      pair.prepared.set(basis[i], std::move(prepared[i]));
    }
  }
  pair.minus_multiplicative = is_multiplicative(pair.gamma_minus);
  pair.plus_multiplicative = is_multiplicative(pair.gamma_plus);
  return pair;
}

LaurentMap closed_counterterm(const LaurentMap& gamma, int workers) {
  require_character(gamma);
  ConvolutionModel m(gamma.hopf(), gamma.bound(), workers);
  const int bound = gamma.bound();
  auto ls = big_l_powers(m, unit_minus(gamma), bound);
  // P_n = Σ_{I ⊨ n} ω(I) 𝔏^I(a) satisfies P_n = (1/n) Σ_k P_{n-k} 𝔏^(k)(a).
  std::vector<LaurentMap> p{m.one()};
  auto out = m.one();
  for (int n = 1; n <= bound; ++n) {
    auto acc = m.zero();
    for (int k = 1; k <= n; ++k) acc = m.add(acc, m.mul(p[static_cast<std::size_t>(n - k)], ls[static_cast<std::size_t>(k - 1)]));
    p.push_back(m.scale(Rational(1, n), acc));
    out = m.add(out, p.back());
  }
  return out;
}

Rational refinement_omega_coefficient(const Composition& k) {
  Rational total;
  for (const auto& j : enumerate_compositions(k.weight())) {
    if (!refines(k, j)) continue;
    int len = j.length();
    total += Rational(len % 2 ? 1 : -1, len) * omega_refined(k, j);
  }
  return total;
}

bool refinement_coefficients_match_simplex(int max_weight) {
  for (int n = 1; n <= max_weight; ++n) {
    for (const auto& k : enumerate_compositions(n)) {
      if (refinement_omega_coefficient(k) != strichartz_coefficient(k)) return false;
    }
  }
  return true;
}

LaurentMap exp_counterterm(const LaurentMap& gamma, int workers) {
  require_character(gamma);
  ConvolutionModel m(gamma.hopf(), gamma.bound(), workers);
  const int bound = gamma.bound();
  auto ls = big_l_powers(m, unit_minus(gamma), bound);
  auto omega = m.zero();
  for (int n = 1; n <= bound; ++n) {
    for (const auto& k : enumerate_compositions(n)) {
      Rational c = refinement_omega_coefficient(k);
      if (c.is_zero()) continue;
      auto prod = ls[static_cast<std::size_t>(k[0] - 1)];
      for (int i = 1; i < k.length(); ++i) prod = m.mul(prod, ls[static_cast<std::size_t>(k[static_cast<std::size_t>(i)] - 1)]);
      omega = m.add(omega, m.scale(c, prod));
    }
  }
  return conv_exp(omega, workers);
}

std::map<Basis, Rational> renormalized_limit(const BirkhoffPair& pair) {
  const auto& g = pair.gamma_plus;
  std::map<Basis, Rational> out;
  for (const auto& b : g.hopf()->basis_up_to(g.bound())) {
    auto v = g(b);
    if (v.pole_order() > 0) throw PreconditionError("renormalized value on " + g.hopf()->render(b) + " still has a pole");
    out.emplace(b, v.coeff(0));
  }
  return out;
}

BetaReport beta_report(const LaurentMap& gamma, int workers) {
  auto pair = bogoliubov(gamma, workers);
  BetaReport report{dynkin(pair.gamma_minus, workers), false, {}};
  report.reconstruction_holds = gamma_reconstruct(report.dynkin_minus, workers) == pair.gamma_minus;
  const auto& h = gamma.hopf();
  for (int d = 1; d <= gamma.bound(); ++d) {
    DegreeBeta beta{d, true, {}};
    for (const auto& b : h->basis(d)) {
      auto v = report.dynkin_minus(b);
      if (v.is_zero()) continue;
      auto terms = v.terms();
      if (terms.size() != 1 || terms.begin()->first != -d) {
        beta.scalar_form = false;
        beta.coeffs.clear();
        break;
      }
      beta.coeffs.emplace(b, terms.begin()->second);
    }
    report.degrees.push_back(std::move(beta));
  }
  return report;
}

bool uniqueness_check(const LaurentMap& gamma, int workers) {
  auto pair = bogoliubov(gamma, workers);
  ConvolutionModel m(gamma.hopf(), gamma.bound(), workers);
  auto a = unit_minus(gamma);
  auto f = atkinson_F(m, a, gamma.bound());
  auto g = atkinson_G(m, a, gamma.bound());
  auto minus = m.zero(), g_sum = m.zero();
  for (int n = 0; n <= gamma.bound(); ++n) {
    minus = m.add(minus, f[n]);
    g_sum = m.add(g_sum, g[n]);
  }
  return minus == pair.gamma_minus && conv_inverse(g_sum) == pair.gamma_plus;
}

namespace {

Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": coefficient must be an integer or a \"p/q\" string");
}

int json_exponent(const std::string& key, const std::string& where) {
  std::size_t used = 0;
  long long e = 0;
  try {
    e = std::stoll(key, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": exponent \"" + key + "\" is not an integer");
  }
  if (used != key.size()) throw ParseError(where + ": exponent \"" + key + "\" is not an integer");
  if (e < -1000000 || e > 1000000) throw WindowOverflow(where + ": exponent " + key + " is outside the supported range");
  return static_cast<int>(e);
}

}  // namespace

IngestedCharacter ingest_character_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("character file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("character file must hold a JSON object");
  if (!doc.contains("hopf") || !doc["hopf"].is_string()) throw ParseError("missing \"hopf\"");
  if (!doc.contains("degree")) throw ParseError("missing \"degree\"");
  if (!doc["degree"].is_number_integer()) throw ParseError("\"degree\" must be an integer");
  auto kind_name = doc["hopf"].get<std::string>();
  HopfKind kind;
  if (kind_name == "ladder") kind = HopfKind::Ladder;
  else if (kind_name == "trees") kind = HopfKind::Trees;
  else throw ParseError("unknown Hopf algebra \"" + kind_name + "\"");
  auto degree = doc["degree"].get<long long>();
  if (degree < 0 || degree > 12) throw ParseError("\"degree\" must lie in 0..12");
  std::optional<int> pole_depth;
  if (doc.contains("pole_depth")) {
    if (!doc["pole_depth"].is_number_integer() || doc["pole_depth"].get<long long>() < 0) throw ParseError("\"pole_depth\" must be a nonnegative integer");
    pole_depth = static_cast<int>(doc["pole_depth"].get<long long>());
  }

  auto h = HopfAlgebra::make(kind, static_cast<int>(degree));
  std::map<int, LaurentSeries> gens;
  if (doc.contains("values")) {
    const auto& values = doc["values"];
    if (!values.is_object()) throw ParseError("\"values\" must be an object");
    for (const auto& [name, series] : values.items()) {
      int gen = h->find_generator(name);
      if (!series.is_object()) throw ParseError("value of " + name + " must map exponents to coefficients");
      std::map<int, Rational> coeffs;
      for (const auto& [exp, c] : series.items()) coeffs[json_exponent(exp, name)] += json_rational(c, name);
      auto v = LaurentSeries::from_map(coeffs);
      if (pole_depth && v.pole_order() > *pole_depth * h->generator_degree(gen)) {
        throw WindowOverflow("pole of order " + std::to_string(v.pole_order()) + " on " + name + " exceeds pole_depth times its degree");
      }
      gens.insert_or_assign(gen, std::move(v));
    }
  }
  return {h, character_from_generators(h, LaurentMSModel{}, static_cast<int>(degree), gens)};
}

IngestedCharacter ingest_character(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ingest_character_text(text.str());
}

}  // namespace rbalg
