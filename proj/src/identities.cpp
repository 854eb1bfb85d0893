#include "rbalg/identities.hpp"

#include "rbalg/hopf.hpp"
#include "rbalg/ncpoly.hpp"

namespace rbalg {

std::string describe_nonzero(const SequenceModel&, const SeqElement& x) {
  for (std::size_t k = 0; k < x.components.size(); ++k) {
    if (x.components[k].is_zero()) continue;
    std::string s = x.components[k].to_string();
    if (s.size() > 200) s = s.substr(0, 200) + "...";
    return "component " + std::to_string(k + 1) + ": " + s;
  }
  return {};
}

Checked<std::pair<NCPoly, NCPoly>> check_ncqsym(int n, int k) {
  detail::Stopwatch clock;
  if (n < 1 || k < 1) throw PreconditionError("ncqsym check needs n >= 1 and k >= 1");
  SequenceModel m(k);
  std::vector<int> up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    up[static_cast<std::size_t>(i)] = i + 1;
    down[static_cast<std::size_t>(i)] = n - i;
  }
  const auto idx = static_cast<std::size_t>(k - 1);
  NCPoly left = rx_bracket(m, n, Bracket::Left).components[idx];
  NCPoly right = rx_bracket(m, n, Bracket::Right).components[idx];
  NCPoly m_left = m_qsym_truncated(up, k - 1);
  NCPoly m_right = m_qsym_truncated(down, k - 1);
  Checked<std::pair<NCPoly, NCPoly>> out{IdentityReport{}, {left - m_left, right - m_right}};
  auto& r = out.report;
  r.identity = "sequence brackets as quasi-symmetric monomials";
  r.model = m.name();
  r.weight = m.weight().to_string();
  r.n = n;
  r.lhs_terms = left.size() + right.size();
  r.rhs_terms = m_left.size() + m_right.size();
  r.residual_zero = out.residual.first.is_zero() && out.residual.second.is_zero();
  if (!out.residual.first.is_zero()) r.first_nonzero = "left bracket: " + out.residual.first.to_string();
  else if (!out.residual.second.is_zero()) r.first_nonzero = "right bracket: " + out.residual.second.to_string();
  r.elapsed_seconds = clock.seconds();
  return out;
}

namespace {

struct NcsfSubstitution {
  explicit NcsfSubstitution(int n) : m(n + 2), x(m.generator_sequence(0)), brackets(rx_left_brackets(m, x, n)) {
    for (int k = 1; k <= n; ++k) w.push_back(m.mul(brackets[static_cast<std::size_t>(k - 1)], x));
  }

  SeqElement dot(const HopfElement& e) const {
    SeqElement out = m.zero();
    for (const auto& [b, c] : e.terms()) {
      SeqElement prod = m.one();
      for (int g : b.gens) prod = m.mul(prod, brackets[static_cast<std::size_t>(g)]);
      out = m.add(out, m.scale(c, prod));
    }
    return out;
  }

  SeqElement star(const HopfElement& e) const {
    SeqElement out = m.zero();
    for (const auto& [b, c] : e.terms()) {
      if (b.gens.empty()) throw PreconditionError("the double product algebra has no unit to receive S_0");
      SeqElement prod = w[static_cast<std::size_t>(b.gens[0] - 1)];
      for (std::size_t i = 1; i < b.gens.size(); ++i) prod = double_product(m, prod, w[static_cast<std::size_t>(b.gens[i] - 1)]);
      out = m.add(out, m.scale(c, prod));
    }
    return out;
  }

  SequenceModel m;
  SeqElement x;
  std::vector<SeqElement> brackets;
  std::vector<SeqElement> w;
};

Checked<std::pair<SeqElement, SeqElement>> substitution_report(const NcsfSubstitution& sub, std::string identity, int n,
                                                              const HopfElement& image, const SeqElement& want_dot,
                                                              const SeqElement& want_star,
                                                              const detail::Stopwatch& clock) {
  const auto& m = sub.m;
  Checked<std::pair<SeqElement, SeqElement>> out{IdentityReport{}, {m.sub(sub.dot(image), want_dot), m.sub(sub.star(image), want_star)}};
  auto& r = out.report;
  r.identity = std::move(identity);
  r.model = m.name();
  r.weight = m.weight().to_string();
  r.n = n;
  r.lhs_terms = image.terms().size();
  r.rhs_terms = 1;
  bool dot_zero = m.is_zero(out.residual.first), star_zero = m.is_zero(out.residual.second);
  r.residual_zero = dot_zero && star_zero;
  if (!dot_zero) r.first_nonzero = "dot product: " + describe_nonzero(m, out.residual.first);
  else if (!star_zero) r.first_nonzero = "double product: " + describe_nonzero(m, out.residual.second);
  r.elapsed_seconds = clock.seconds();
  return out;
}

}  // namespace

Checked<std::pair<SeqElement, SeqElement>> check_antipode_spitzer(int n) {
  detail::Stopwatch clock;
  if (n < 1) throw PreconditionError("antipode check needs n >= 1");
  auto h = HopfAlgebra::ncsf(n);
  NcsfSubstitution sub(n);
  const auto& m = sub.m;
  HopfElement image = antipode(h, HopfElement(Basis{{n}}));
  // (R̃X)^{0} = 1, (R̃X)^{k+1} = R̃(X (R̃X)^{k})
  SeqElement t = m.one();
  for (int k = 1; k < n; ++k) t = tilde_r(m, m.mul(sub.x, t));
  SeqElement star = m.negate(m.mul(sub.x, t));
  return substitution_report(sub, "NCSF antipode on divided powers", n, image, m.apply_r(star), star, clock);
}

Checked<std::pair<SeqElement, SeqElement>> check_dynkin_generators(int n) {
  detail::Stopwatch clock;
  if (n < 1) throw PreconditionError("Dynkin check needs n >= 1");
  auto h = HopfAlgebra::ncsf(n);
  NcsfSubstitution sub(n);
  HopfElement image = dynkin_operator(h, n)(Basis{{n}});
  return substitution_report(sub, "NCSF Dynkin operator on divided powers", n, image,
                             big_l_powers(sub.m, sub.x, n).back(), left_powers(sub.m, sub.x, n).back(), clock);
}

}  // namespace rbalg
