#include <gtest/gtest.h>

#include "rbalg/random.hpp"
#include "rbalg/rb_models.hpp"

using namespace rbalg;

namespace {

NCPoly x(int i, int alphabet = 0) { return NCPoly::generator(Generator(alphabet, i)); }

std::vector<int> descending(int n) {
  std::vector<int> f;
  for (int i = n; i >= 1; --i) f.push_back(i);
  return f;
}

std::vector<int> ascending(int n) {
  std::vector<int> f;
  for (int i = 1; i <= n; ++i) f.push_back(i);
  return f;
}

}  // namespace

TEST(Sequence, PartialSums) {
  SequenceModel m(6);
  auto X = m.generator_sequence(0);
  auto rx = standard_r(m, X);
  for (int k = 1; k <= 6; ++k) {
    NCPoly want;
    for (int j = 1; j < k; ++j) want += x(j);
    EXPECT_EQ(rx.components[static_cast<std::size_t>(k - 1)], want);
  }
  EXPECT_TRUE(m.is_zero(standard_r(m, m.zero())));
  EXPECT_EQ(X.components[2], x(3));
  EXPECT_NE(m.generator_sequence(0), m.generator_sequence(1));
  auto sq = m.mul(X, X);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(sq.components[static_cast<std::size_t>(k - 1)], x(k) * x(k));
}

TEST(Sequence, BracketExamples) {
  SequenceModel m(8);
  EXPECT_EQ(rx_bracket(m, 0, Bracket::Left), m.one());
  EXPECT_EQ(rx_bracket(m, 2, Bracket::Left).components[3], x(1) * x(2) + x(1) * x(3) + x(2) * x(3));
  EXPECT_EQ(rx_bracket(m, 2, Bracket::Right).components[3], x(2) * x(1) + x(3) * x(1) + x(3) * x(2));
  EXPECT_THROW(rx_bracket(m, -1, Bracket::Left), PreconditionError);
}

TEST(Sequence, BracketsAreQuasiSymmetricMonomials) {
  SequenceModel m(8);
  for (int n = 1; n <= 4; ++n) {
    auto left = rx_bracket(m, n, Bracket::Left);
    auto right = rx_bracket(m, n, Bracket::Right);
    for (int k = 1; k <= 8; ++k) {
      EXPECT_EQ(left.components[static_cast<std::size_t>(k - 1)], m_qsym_truncated(ascending(n), k - 1)) << n << " " << k;
      EXPECT_EQ(right.components[static_cast<std::size_t>(k - 1)], m_qsym_truncated(descending(n), k - 1)) << n << " " << k;
    }
  }
}

TEST(Laurent, ProjectionExamples) {
  LaurentMSModel m;
  auto v = LaurentSeries::monomial(1, -1) + LaurentSeries(Rational(2)) + LaurentSeries::monomial(1, 1);
  EXPECT_EQ(ms_project(v), LaurentSeries::monomial(1, -1));
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    auto a = random_laurent(rng, 3, 3);
    EXPECT_EQ(m.apply_r(m.apply_r(a)), m.apply_r(a));
  }
  EXPECT_THROW(ms_project(LaurentSeries::from_map({{-3, Rational(1)}}, -2)), PreconditionError);
  EXPECT_NO_THROW(ms_project(LaurentSeries::from_map({{-3, Rational(1)}}, -1)));
}

TEST(Laurent, ImagesAreComplementarySubalgebras) {
  LaurentMSModel m;
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = random_laurent(rng, 3, 3), b = random_laurent(rng, 3, 3);
    auto ra = m.apply_r(a), rb = m.apply_r(b);
    auto ta = tilde_r(m, a), tb = tilde_r(m, b);
    EXPECT_EQ(m.apply_r(m.mul(ra, rb)), m.mul(ra, rb));  // Im R closed
    EXPECT_TRUE(m.apply_r(m.mul(ta, tb)).is_zero());      // Im R̃ closed
    EXPECT_EQ(m.add(ra, ta), a);
    EXPECT_TRUE(m.apply_r(ta).is_zero());
  }
}

TEST(PolyInt, IntegrationByParts) {
  PolyIntModel m;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = random_upoly(rng, 4), g = random_upoly(rng, 4);
    EXPECT_EQ(m.mul(m.apply_r(f), m.apply_r(g)), m.apply_r(m.mul(m.apply_r(f), g)) + m.apply_r(m.mul(f, m.apply_r(g))));
  }
  EXPECT_EQ(m.apply_r(m.one()), UPoly({Rational(0), Rational(1)}));
}

TEST(Riemann, SummationRelationBothOperators) {
  Rng rng(9);
  for (const Rational& h : {Rational(1), Rational(1, 2)}) {
    RiemannModel plain(h, 7, false), shifted(h, 7, true);
    EXPECT_EQ(plain.weight(), -h);
    EXPECT_EQ(shifted.weight(), h);
    for (int i = 0; i < 100; ++i) {
      auto f = random_element(plain, rng), g = random_element(plain, rng);
      // R(f)R(g) = R(R(f)g) + R(fR(g)) - h R(fg)
      auto lhs = plain.mul(plain.apply_r(f), plain.apply_r(g));
      auto rhs = plain.sub(plain.add(plain.apply_r(plain.mul(plain.apply_r(f), g)), plain.apply_r(plain.mul(f, plain.apply_r(g)))),
                           plain.scale(h, plain.apply_r(plain.mul(f, g))));
      EXPECT_EQ(lhs, rhs);
      EXPECT_TRUE(shifted.is_zero(check_rb(shifted, f, g)));
    }
  }
}

TEST(Matrix, NoncommutativeAndEntrywiseIntegral) {
  MatrixPolyModel m(2);
  Rng rng(1);
  auto a = random_element(m, rng), b = random_element(m, rng);
  EXPECT_FALSE(m.equal(m.mul(a, b), m.mul(b, a)));
  auto ra = m.apply_r(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(ra.at(i, j), a.at(i, j).integral());
  EXPECT_EQ(m.mul(m.one(), a), a);
}
