#include <gtest/gtest.h>

#include <tuple>

#include "rbalg/hopf.hpp"
#include "rbalg/random.hpp"

using namespace rbalg;

namespace {

using Triple = std::map<std::tuple<Basis, Basis, Basis>, Rational>;

void accumulate(Triple& t, const Basis& a, const Basis& b, const Basis& c, const Rational& v) {
  auto& slot = t[{a, b, c}];
  slot = slot + v;
  if (slot.is_zero()) t.erase({a, b, c});
}

// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ expanded from the single coproduct.
std::pair<Triple, Triple> iterated_coproducts(const HopfAlgebra& h, const Basis& b) {
  Triple left, right;
  for (const auto& t : h.coproduct(b)) {
    for (const auto& u : h.coproduct(t.left)) accumulate(left, u.left, u.right, t.right, t.coeff * u.coeff);
    for (const auto& u : h.coproduct(t.right)) accumulate(right, t.left, u.left, u.right, t.coeff * u.coeff);
  }
  return {left, right};
}

std::vector<HopfPtr> instances(int degree) {
  return {HopfAlgebra::ladder(degree), HopfAlgebra::trees(degree), HopfAlgebra::ncsf(degree)};
}

LinMap<LaurentMSModel> random_character(const HopfPtr& h, int bound, Rng& rng) {
  std::map<int, LaurentSeries> gens;
  for (int d = 1; d <= bound; ++d) {
    for (int g : h->generators(d)) gens[g] = random_laurent(rng, 1, 1);
  }
  return character_from_generators(h, LaurentMSModel{}, bound, gens);
}

Basis B(std::vector<int> g) { return Basis{std::move(g)}; }

}  // namespace

TEST(Trees, ParseAndCanonicalForm) {
  EXPECT_EQ(Tree::parse("(()(()))").to_string(), Tree::parse("((())())").to_string());
  EXPECT_EQ(Tree::parse("\xE2\x80\xA2").to_string(), "()");
  EXPECT_EQ(Tree::parse(" ( ( ) ) ").to_string(), "(())");
  EXPECT_EQ(Tree::parse("((()))").size(), 3);
  EXPECT_EQ(parse_forest("() (())").size(), 2u);
  EXPECT_THROW(Tree::parse("(()"), ParseError);
  EXPECT_THROW(Tree::parse("()()"), ParseError);
  EXPECT_THROW(Tree::parse("x"), ParseError);
}

TEST(Trees, CountsByDegree) {
  auto h = HopfAlgebra::trees(8);
  std::vector<std::size_t> want{1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(h->generators(n).size(), want[static_cast<std::size_t>(n - 1)]) << n;
  // Forests with n vertices are counted by trees with n + 1 vertices.
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(h->basis(n).size(), want[static_cast<std::size_t>(n)]) << n;
  EXPECT_THROW((void)h->find_generator("((((((((()))))))))"), ParseError);
}

TEST(Coproduct, LadderAndNcsfDividedPowers) {
  auto h = HopfAlgebra::ladder(6);
  auto d = h->coproduct(B({2}));
  ASSERT_EQ(d.size(), 3u);
  std::map<std::pair<Basis, Basis>, Rational> got;
  for (const auto& t : d) got[{t.left, t.right}] = t.coeff;
  EXPECT_EQ((got[{B({2}), B({})}]), Rational(1));
  EXPECT_EQ((got[{B({1}), B({1})}]), Rational(1));
  EXPECT_EQ((got[{B({}), B({2})}]), Rational(1));
  // Δ(t1 t1) = t1t1⊗1 + 2 t1⊗t1 + 1⊗t1t1
  std::map<std::pair<Basis, Basis>, Rational> sq;
  for (const auto& t : h->coproduct(B({1, 1}))) sq[{t.left, t.right}] = t.coeff;
  EXPECT_EQ((sq[{B({1}), B({1})}]), Rational(2));
  EXPECT_EQ(h->find_generator("t3"), 3);
  EXPECT_THROW((void)h->find_generator("S3"), ParseError);
  auto n = HopfAlgebra::ncsf(6);
  std::map<std::pair<Basis, Basis>, Rational> nc;
  for (const auto& t : n->coproduct(B({1, 2}))) nc[{t.left, t.right}] = t.coeff;
  EXPECT_EQ(nc.size(), 6u);
  EXPECT_EQ((nc[{B({1, 1}), B({1})}]), Rational(1));
  EXPECT_EQ((nc[{B({1}), B({2})}]), Rational(1));
}

TEST(Coproduct, TreeCuts) {
  auto h = HopfAlgebra::trees(5);
  int dot = h->find_generator("()");
  EXPECT_EQ(h->coproduct(B({dot})).size(), 2u);
  int stick = h->find_generator("(())");
  int cherry = h->find_generator("(()())");
  std::map<std::pair<Basis, Basis>, Rational> got;
  for (const auto& t : h->coproduct(B({cherry}))) got[{t.left, t.right}] = t.coeff;
  EXPECT_EQ(got.size(), 4u);
  EXPECT_EQ((got[{B({dot}), B({stick})}]), Rational(2));
  EXPECT_EQ((got[{B({dot, dot}), B({dot})}]), Rational(1));
  EXPECT_EQ((got[{B({}), B({cherry})}]), Rational(1));
  EXPECT_EQ((got[{B({cherry}), B({})}]), Rational(1));
}

TEST(HopfAxioms, CoassociativityAndCounit) {
  for (const auto& h : instances(5)) {
    for (const auto& b : h->basis_up_to(5)) {
      auto [l, r] = iterated_coproducts(*h, b);
      EXPECT_EQ(l, r) << h->name() << " " << h->render(b);
      Rational left_unit(0), right_unit(0);
      for (const auto& t : h->coproduct(b)) {
        if (t.left.gens.empty()) {
          EXPECT_EQ(t.right, b);
          left_unit = left_unit + t.coeff;
        }
        if (t.right.gens.empty()) {
          EXPECT_EQ(t.left, b);
          right_unit = right_unit + t.coeff;
        }
      }
      EXPECT_EQ(left_unit, Rational(1));
      EXPECT_EQ(right_unit, Rational(1));
    }
  }
}

TEST(HopfAxioms, CoproductIsMultiplicative) {
  for (const auto& h : instances(5)) {
    HopfTarget t(h);
    auto basis = h->basis_up_to(2);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        std::map<std::pair<Basis, Basis>, Rational> prod, direct;
        for (const auto& x : h->coproduct(a)) {
          for (const auto& y : h->coproduct(b)) {
            auto& s = prod[{h->product(x.left, y.left), h->product(x.right, y.right)}];
            s = s + x.coeff * y.coeff;
          }
        }
        for (const auto& z : h->coproduct(h->product(a, b))) direct[{z.left, z.right}] = z.coeff;
        std::erase_if(prod, [](const auto& kv) { return kv.second.is_zero(); });
        EXPECT_EQ(prod, direct) << h->name();
      }
    }
  }
}

TEST(HopfAxioms, AntipodeIdentities) {
  auto ladder = HopfAlgebra::ladder(5);
  EXPECT_EQ(antipode(ladder, HopfElement(B({1}))), HopfElement(B({1}), Rational(-1)));
  EXPECT_EQ(antipode(ladder, HopfElement(B({2}))), HopfElement(B({2}), Rational(-1)) + HopfElement(B({1, 1})));
  for (const auto& h : instances(5)) {
    HopfTarget t(h);
    auto s = antipode_map(h, 5);
    auto id = identity_map(h, 5);
    auto e = counit_map(h, t, 5);
    EXPECT_TRUE(convolution(s, id) == e) << h->name();
    EXPECT_TRUE(convolution(id, s) == e) << h->name();
    // S reverses products.
    auto basis = h->basis_up_to(2);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        EXPECT_EQ(s(h->product(a, b)), t.mul(s(b), s(a))) << h->name();
      }
    }
  }
}

TEST(Convolution, CounitIsTheUnit) {
  Rng rng(3);
  auto h = HopfAlgebra::trees(5);
  auto g = random_character(h, 5, rng);
  auto e = counit_map(h, LaurentMSModel{}, 5);
  EXPECT_TRUE(convolution(e, g) == g);
  EXPECT_TRUE(convolution(g, e) == g);
  EXPECT_TRUE(is_multiplicative(g));
  EXPECT_THROW(conv_exp(g), PreconditionError);
  EXPECT_THROW(conv_inverse(sub(g, e)), PreconditionError);
}

TEST(Eulerian, LogExpRoundTripLadderDegreeEight) {
  Rng rng(5);
  auto h = HopfAlgebra::ladder(8);
  auto g = random_character(h, 8, rng);
  auto l = conv_log(g);
  EXPECT_TRUE(is_infinitesimal(l));
  EXPECT_TRUE(l(B({1, 1})).is_zero());
  EXPECT_TRUE(conv_exp(l) == g);
  EXPECT_TRUE(is_multiplicative(conv_exp(l)));
}

TEST(Eulerian, LogExpRoundTripTreesAndNcsf) {
  Rng rng(7);
  for (const auto& h : {HopfAlgebra::trees(6), HopfAlgebra::ncsf(6)}) {
    auto g = random_character(h, 6, rng);
    auto l = conv_log(g);
    EXPECT_TRUE(is_infinitesimal(l)) << h->name();
    EXPECT_TRUE(conv_exp(l) == g) << h->name();
  }
}

TEST(Dynkin, PrimitiveAndLowDegree) {
  auto h = HopfAlgebra::ladder(4);
  LaurentMSModel a;
  auto c = LaurentSeries::monomial(Rational(5), -2);
  auto g = character_from_generators(h, a, 4, {{3, c}});
  auto d = dynkin(g);
  EXPECT_EQ(d(B({3})), Rational(3) * c);
  EXPECT_TRUE(is_infinitesimal(d));
  // D(t2) = S(t1) t1 + 2 t2 = 2 t2 - t1 t1 in End(H)
  auto op = dynkin_operator(h, 4);
  EXPECT_EQ(op(B({2})), HopfElement(B({2}), Rational(2)) - HopfElement(B({1, 1})));
  EXPECT_EQ(op(B({1})), HopfElement(B({1})));
}

TEST(Dynkin, QuasiIdempotent) {
  for (const auto& h : instances(6)) {
    auto d = dynkin_operator(h, 6);
    auto dd = compose(d, d);
    auto yd = graded(d);
    EXPECT_TRUE(dd == yd) << h->name();
  }
}

TEST(Dynkin, CharacterImagesAreInfinitesimal) {
  Rng rng(9);
  for (const auto& h : instances(6)) {
    auto g = random_character(h, 6, rng);
    auto d = dynkin(g);
    EXPECT_TRUE(is_infinitesimal(d)) << h->name();
    for (int k = 1; k <= 6; ++k) EXPECT_TRUE(is_infinitesimal(degree_component(d, k)));
    // Character form agrees with the operator form: γ∘D_H = D(γ).
    EXPECT_TRUE(compose(g, dynkin_operator(h, 6)) == d) << h->name();
  }
}

TEST(Gamma, LowDegreeFormula) {
  Rng rng(11);
  auto h = HopfAlgebra::ladder(4);
  LaurentMSModel a;
  auto h1 = random_laurent(rng, 1, 0), h2 = random_laurent(rng, 2, 0);
  auto inf = zero_map(h, a, 4);
  inf.set(B({1}), h1);
  inf.set(B({2}), h2);
  auto g = gamma_reconstruct(inf);
  EXPECT_EQ(g(B({1})), h1);
  // h2/2 + (h1⋆h1)/2 on t2: h1⋆h1(t2) = h1(t1) h1(t1)
  EXPECT_EQ(g(B({2})), Rational(1, 2) * h2 + Rational(1, 2) * (h1 * h1));
  EXPECT_TRUE(gamma_reconstruct_direct(inf) == g);
  EXPECT_THROW(gamma_reconstruct(counit_map(h, a, 4)), PreconditionError);
}

TEST(Gamma, GroupedMatchesCompositionSum) {
  Rng rng(13);
  auto h = HopfAlgebra::trees(5);
  auto d = dynkin(random_character(h, 5, rng));
  EXPECT_TRUE(gamma_reconstruct(d) == gamma_reconstruct_direct(d));
}

TEST(Gamma, InvertsDynkinDegreeEight) {
  Rng rng(15);
  for (const auto& h : {HopfAlgebra::ladder(8), HopfAlgebra::trees(8)}) {
    auto g = random_character(h, 8, rng);
    EXPECT_TRUE(gamma_reconstruct(dynkin(g)) == g) << h->name();
  }
}

TEST(Gamma, DynkinInvertsGamma) {
  Rng rng(17);
  auto h = HopfAlgebra::trees(6);
  LaurentMSModel a;
  auto inf = zero_map(h, a, 6);
  for (int d = 1; d <= 6; ++d) {
    for (int g : h->generators(d)) inf.set(B({g}), random_laurent(rng, 1, 1));
  }
  auto g = gamma_reconstruct(inf);
  EXPECT_TRUE(is_multiplicative(g));
  EXPECT_TRUE(dynkin(g) == inf);
}

TEST(Ncsf, GeneratingSeriesIsGroupLike) {
  // Δ(S_n) = Σ S_i ⊗ S_{n-i}: the degree-n part of (Σ S_k) ⊗ (Σ S_k).
  auto h = HopfAlgebra::ncsf(6);
  for (int n = 1; n <= 6; ++n) {
    std::map<std::pair<Basis, Basis>, Rational> got, want;
    for (const auto& t : h->coproduct(B({n}))) got[{t.left, t.right}] = t.coeff;
    for (int i = 0; i <= n; ++i) want[{i ? B({i}) : B({}), i < n ? B({n - i}) : B({})}] = Rational(1);
    EXPECT_EQ(got, want);
  }
}
