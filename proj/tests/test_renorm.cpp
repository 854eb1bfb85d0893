#include <gtest/gtest.h>

#include "rbalg/random.hpp"
#include "rbalg/renorm.hpp"
#include "rbalg/series.hpp"

using namespace rbalg;

namespace {

LaurentSeries eps(const Rational& c, int exponent) { return LaurentSeries::monomial(c, exponent); }

LaurentMap random_character(const HopfPtr& h, int bound, Rng& rng) {
  std::map<int, LaurentSeries> gens;
  for (int d = 1; d <= bound; ++d) {
    for (int g : h->generators(d)) gens[g] = random_laurent(rng, 1, 1);
  }
  return character_from_generators(h, LaurentMSModel{}, bound, gens);
}

LaurentMap random_linmap(const HopfPtr& h, int bound, Rng& rng) {
  LaurentMap f(h, LaurentMSModel{}, bound);
  for (const auto& b : h->basis_up_to(bound)) f.set(b, random_laurent(rng, 2, 2));
  return f;
}

LaurentMap ladder_character(const HopfPtr& h, int bound, const std::map<int, LaurentSeries>& by_degree) {
  std::map<int, LaurentSeries> gens;
  for (const auto& [d, v] : by_degree) gens[h->generators(d).front()] = v;
  return character_from_generators(h, LaurentMSModel{}, bound, gens);
}

Basis ladder_gen(const HopfPtr& h, int degree) { return h->generator_basis(h->generators(degree).front()); }

}  // namespace

TEST(ConvolutionModel, SatisfiesRotaBaxterRelationOfWeightMinusOne) {
  Rng rng(11);
  for (const auto& h : {HopfAlgebra::ladder(4), HopfAlgebra::trees(4), HopfAlgebra::ncsf(4)}) {
    ConvolutionModel m(h, 4);
    EXPECT_EQ(m.weight(), Rational(-1));
    for (int trial = 0; trial < 3; ++trial) {
      auto x = random_linmap(h, 4, rng), y = random_linmap(h, 4, rng);
      EXPECT_TRUE(m.is_zero(check_rb(m, x, y))) << h->name();
    }
  }
}

TEST(ConvolutionModel, ProjectionIsIdempotentAndRejectsForeignMaps) {
  Rng rng(12);
  auto h = HopfAlgebra::ladder(4);
  ConvolutionModel m(h, 4);
  auto x = random_linmap(h, 4, rng);
  EXPECT_EQ(m.apply_r(m.apply_r(x)), m.apply_r(x));
  auto other = random_linmap(HopfAlgebra::ladder(4), 4, rng);
  EXPECT_THROW((void)check_rb(m, x, other), ModelMismatch);
}

TEST(Bogoliubov, DegreeOneSplitsPoleAndRegularPart) {
  auto h = HopfAlgebra::ladder(3);
  auto gamma = ladder_character(h, 3, {{1, eps(1, -1) + eps(1, 0)}});
  auto pair = bogoliubov(gamma);
  auto t1 = ladder_gen(h, 1);
  EXPECT_EQ(pair.gamma_minus(t1), eps(-1, -1));
  EXPECT_EQ(pair.gamma_plus(t1), eps(1, 0));
  EXPECT_EQ(renormalized_limit(pair).at(t1), Rational(1));
  EXPECT_EQ(renormalized_limit(pair).at(Basis{}), Rational(1));
}

TEST(Bogoliubov, PurePoleLadderCharacterHasVanishingPreparationAtDegreeTwo) {
  auto h = HopfAlgebra::ladder(4);
  std::map<int, LaurentSeries> vals;
  for (int n = 1; n <= 4; ++n) vals[n] = eps(1, -n);
  auto pair = bogoliubov(ladder_character(h, 4, vals));
  auto t2 = ladder_gen(h, 2);
  EXPECT_TRUE(pair.prepared(t2).is_zero());
  EXPECT_TRUE(pair.gamma_minus(t2).is_zero());
  EXPECT_TRUE(pair.gamma_plus(t2).is_zero());
}

TEST(Bogoliubov, PoleFreeCharacterIsAlreadyRenormalized) {
  Rng rng(13);
  auto h = HopfAlgebra::trees(4);
  std::map<int, LaurentSeries> gens;
  for (int d = 1; d <= 4; ++d) {
    for (int g : h->generators(d)) gens[g] = random_laurent(rng, 0, 2);
  }
  auto gamma = character_from_generators(h, LaurentMSModel{}, 4, gens);
  auto pair = bogoliubov(gamma);
  EXPECT_EQ(pair.gamma_minus, counit_map(h, LaurentMSModel{}, 4));
  EXPECT_EQ(pair.gamma_plus, gamma);
  auto limit = renormalized_limit(pair);
  for (const auto& b : h->basis_up_to(4)) EXPECT_EQ(limit.at(b), gamma(b).coeff(0));
  EXPECT_TRUE(uniqueness_check(gamma));
}

TEST(Bogoliubov, BirkhoffInvariantsOnRandomCharacters) {
  Rng rng(14);
  for (const auto& [h, bound] : std::vector<std::pair<HopfPtr, int>>{{HopfAlgebra::ladder(6), 6}, {HopfAlgebra::trees(5), 5}, {HopfAlgebra::ncsf(4), 4}}) {
    auto gamma = random_character(h, bound, rng);
    auto pair = bogoliubov(gamma);
    EXPECT_TRUE(pair.minus_multiplicative) << h->name();
    EXPECT_TRUE(pair.plus_multiplicative) << h->name();
    EXPECT_EQ(convolution(conv_inverse(pair.gamma_minus), pair.gamma_plus), gamma) << h->name();
    for (const auto& b : h->basis_up_to(bound)) {
      auto minus = pair.gamma_minus(b);
      auto plus = pair.gamma_plus(b);
      EXPECT_EQ(plus.pole_order(), 0) << h->render(b);
      if (!b.gens.empty()) EXPECT_EQ(ms_project(minus), minus) << h->render(b);
    }
  }
}

TEST(Bogoliubov, WorkerCountDoesNotChangeTheResult) {
  Rng rng(15);
  auto h = HopfAlgebra::trees(5);
  auto gamma = random_character(h, 5, rng);
  auto one = bogoliubov(gamma, 1);
  auto three = bogoliubov(gamma, 3);
  EXPECT_EQ(one.gamma_minus, three.gamma_minus);
  EXPECT_EQ(one.gamma_plus, three.gamma_plus);
  EXPECT_EQ(closed_counterterm(gamma, 1), closed_counterterm(gamma, 3));
}

TEST(Bogoliubov, RejectsNonMultiplicativeInput) {
  auto h = HopfAlgebra::ladder(3);
  auto gamma = ladder_character(h, 3, {{1, eps(1, -1)}});
  gamma.set(Basis{{ladder_gen(h, 1).gens[0], ladder_gen(h, 1).gens[0]}}, eps(5, 0));
  EXPECT_THROW((void)bogoliubov(gamma), PreconditionError);
}

TEST(Counterterm, ClosedFormAtDegreeOne) {
  auto h = HopfAlgebra::ladder(1);
  auto gamma = ladder_character(h, 1, {{1, eps(3, -1) + eps(2, 0) + eps(1, 1)}});
  auto closed = closed_counterterm(gamma);
  EXPECT_EQ(closed(ladder_gen(h, 1)), -ms_project(gamma(ladder_gen(h, 1))));
}

TEST(Counterterm, ThreeWayAgreementOnLadderAndTrees) {
  Rng rng(16);
  for (const auto& [h, bound] : std::vector<std::pair<HopfPtr, int>>{{HopfAlgebra::ladder(6), 6}, {HopfAlgebra::trees(5), 5}}) {
    auto gamma = random_character(h, bound, rng);
    auto minus = bogoliubov(gamma).gamma_minus;
    EXPECT_EQ(closed_counterterm(gamma), minus) << h->name();
    EXPECT_EQ(exp_counterterm(gamma), minus) << h->name();
  }
}

TEST(Counterterm, AgreementOnNoncommutativeSymmetricFunctions) {
  Rng rng(17);
  auto h = HopfAlgebra::ncsf(4);
  auto gamma = random_character(h, 4, rng);
  auto minus = bogoliubov(gamma).gamma_minus;
  EXPECT_EQ(closed_counterterm(gamma), minus);
  EXPECT_EQ(exp_counterterm(gamma), minus);
}

TEST(Counterterm, RefinementCoefficientsMatchSimplexForm) {
  EXPECT_TRUE(refinement_coefficients_match_simplex(6));
  EXPECT_EQ(refinement_omega_coefficient(Composition({1})), Rational(1));
  EXPECT_EQ(refinement_omega_coefficient(Composition({2})), Rational(1, 2));
  EXPECT_EQ(refinement_omega_coefficient(Composition({1, 1})), Rational(0));
  EXPECT_EQ(refinement_omega_coefficient(Composition({1, 2})), Rational(1, 12));
  EXPECT_EQ(refinement_omega_coefficient(Composition({2, 1})), Rational(-1, 12));
}

TEST(Counterterm, WeightedCoefficientsBreakTheExponentialForm) {
  // Multiplying every Ω_n by n no longer matches the simplex coefficients.
  bool all_equal = true;
  for (const auto& k : enumerate_compositions(3)) {
    if (Rational(3) * refinement_omega_coefficient(k) != strichartz_coefficient(k)) all_equal = false;
  }
  EXPECT_FALSE(all_equal);
}

TEST(Renormalized, ResidualPoleIsReported) {
  auto h = HopfAlgebra::ladder(2);
  auto gamma = ladder_character(h, 2, {{1, eps(1, -1)}});
  auto pair = bogoliubov(gamma);
  pair.gamma_plus.set(ladder_gen(h, 1), eps(1, -1));
  EXPECT_THROW((void)renormalized_limit(pair), PreconditionError);
}

TEST(Beta, ReconstructionHoldsOnRandomLadderCharacters) {
  Rng rng(18);
  auto h = HopfAlgebra::ladder(6);
  for (int trial = 0; trial < 2; ++trial) {
    auto report = beta_report(random_character(h, 6, rng));
    EXPECT_TRUE(report.reconstruction_holds);
    EXPECT_TRUE(is_infinitesimal(report.dynkin_minus));
  }
}

TEST(Beta, DegreeOneComponentIsTheCounterterm) {
  Rng rng(19);
  auto h = HopfAlgebra::trees(3);
  auto gamma = random_character(h, 3, rng);
  auto report = beta_report(gamma);
  auto minus = bogoliubov(gamma).gamma_minus;
  for (const auto& b : h->basis(1)) EXPECT_EQ(report.dynkin_minus(b), minus(b));
}

TEST(Beta, ScalarFormForHomogeneousPoleFamily) {
  auto h = HopfAlgebra::ladder(5);
  std::map<int, LaurentSeries> vals;
  for (int n = 1; n <= 5; ++n) vals[n] = eps(Rational(n + 2, 3), -n);
  auto report = beta_report(ladder_character(h, 5, vals));
  EXPECT_TRUE(report.reconstruction_holds);
  ASSERT_EQ(report.degrees.size(), 5U);
  for (const auto& d : report.degrees) EXPECT_TRUE(d.scalar_form) << d.degree;
  EXPECT_EQ(report.degrees[0].coeffs.at(ladder_gen(h, 1)), Rational(-1));
}

TEST(Beta, ScalarFormFlagCanBeFalse) {
  auto h = HopfAlgebra::ladder(2);
  auto report = beta_report(ladder_character(h, 2, {{1, eps(1, -1)}, {2, eps(1, -1)}}));
  EXPECT_TRUE(report.reconstruction_holds);
  EXPECT_TRUE(report.degrees[0].scalar_form);
  EXPECT_FALSE(report.degrees[1].scalar_form);
  EXPECT_EQ(report.dynkin_minus(ladder_gen(h, 2)), eps(1, -2) + eps(-2, -1));
}

TEST(Uniqueness, AtkinsonFactorizationMatchesBogoliubov) {
  Rng rng(20);
  EXPECT_TRUE(uniqueness_check(random_character(HopfAlgebra::ladder(6), 6, rng)));
  EXPECT_TRUE(uniqueness_check(random_character(HopfAlgebra::trees(4), 4, rng)));
}

TEST(Ingest, LadderExample) {
  auto in = ingest_character_text(R"js({"hopf": "ladder", "degree": 3, "values": {"t1": {"-1": 1, "0": "1"}}})js");
  auto t1 = ladder_gen(in.hopf, 1);
  EXPECT_EQ(in.gamma(t1), eps(1, -1) + eps(1, 0));
  EXPECT_EQ(in.gamma(Basis{{t1.gens[0], t1.gens[0]}}), (eps(1, -1) + eps(1, 0)) * (eps(1, -1) + eps(1, 0)));
  EXPECT_TRUE(in.gamma(ladder_gen(in.hopf, 2)).is_zero());
  EXPECT_EQ(bogoliubov(in.gamma).gamma_minus(t1), eps(-1, -1));
}

TEST(Ingest, TreesUpToDegreeThree) {
  auto in = ingest_character_text(R"js({"hopf": "trees", "degree": 3, "values": {
      "()": {"-1": "1/2"}, "(())": {"-1": 1, "1": "-3"}, "((()))": {"-2": 1}, "(()())": {"0": "2/3"}}})js");
  EXPECT_EQ(in.hopf->name(), "trees");
  int dot = in.hopf->find_generator("()");
  int chain = in.hopf->find_generator("(())");
  Basis forest{{dot, chain}};
  std::sort(forest.gens.begin(), forest.gens.end());
  EXPECT_EQ(in.gamma(forest), eps(Rational(1, 2), -1) * (eps(1, -1) + eps(-3, 1)));
  EXPECT_TRUE(is_multiplicative(in.gamma));
}

TEST(Ingest, EmptyValuesGiveTheCounit) {
  auto in = ingest_character_text(R"js({"hopf": "ladder", "degree": 4, "values": {}})js");
  EXPECT_EQ(in.gamma, counit_map(in.hopf, LaurentMSModel{}, 4));
}

TEST(Ingest, Errors) {
  EXPECT_THROW((void)ingest_character_text("{not json"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "values": {}})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "values": {"x1": {"0": 1}}})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "values": {"t3": {"0": 1}}})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "values": {"t1": {"a": 1}}})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "values": {"t1": {"0": "1/0"}}})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "sets", "degree": 2})js"), ParseError);
  EXPECT_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "pole_depth": 1, "values": {"t1": {"-2": 1}}})js"), WindowOverflow);
  EXPECT_NO_THROW((void)ingest_character_text(R"js({"hopf": "ladder", "degree": 2, "pole_depth": 1, "values": {"t2": {"-2": 1}}})js"));
  EXPECT_THROW((void)ingest_character("/nonexistent/character.json"), ParseError);
}
