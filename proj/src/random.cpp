#include "rbalg/random.hpp"

namespace rbalg {

Rational random_rational(Rng& rng, long long span, bool nonzero) {
  std::uniform_int_distribution<long long> num(-span, span), den(1, 4);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

NCPoly random_ncpoly(Rng& rng, int vars, int max_len, int terms, int alphabet) {
  std::uniform_int_distribution<int> len(0, max_len), var(1, vars);
  std::vector<NCPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(Generator(alphabet, var(rng)).code());
    ts.emplace_back(std::move(w), random_rational(rng));
  }
  return NCPoly::from_terms(std::move(ts));
}

LaurentSeries random_laurent(Rng& rng, int max_pole, int max_positive) {
  std::map<int, Rational> c;
  for (int e = -max_pole; e <= max_positive; ++e) c[e] = random_rational(rng);
  return LaurentSeries::from_map(c);
}

UPoly random_upoly(Rng& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  return UPoly(std::move(c));
}

SeqElement random_element(const SequenceModel& m, Rng& rng) {
  std::vector<NCPoly> comps;
  for (int k = 1; k <= m.length(); ++k) comps.push_back(random_ncpoly(rng, std::min(k, 3), 2, 3));
  return m.from_components(std::move(comps));
}

LaurentSeries random_element(const LaurentMSModel&, Rng& rng) { return random_laurent(rng, 2, 2); }

UPoly random_element(const PolyIntModel&, Rng& rng) { return random_upoly(rng, 2); }

PolyMatrix random_element(const MatrixPolyModel& m, Rng& rng) {
  auto r = m.zero();
  for (auto& e : r.entries) e = random_upoly(rng, 2);
  return r;
}

Samples random_element(const RiemannModel& m, Rng& rng) {
  auto r = m.zero();
  for (auto& v : r.values) v = random_rational(rng);
  return r;
}

std::vector<SeqElement> random_scaled_generators(const SequenceModel& m, int n, Rng& rng) {
  std::vector<SeqElement> out;
  for (int i = 1; i <= n; ++i) out.push_back(m.scale(random_rational(rng, 5, true), m.generator_sequence(i)));
  return out;
}

}  // namespace rbalg
