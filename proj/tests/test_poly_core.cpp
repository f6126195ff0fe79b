#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace nucideal;
using nucideal::testing::P;
using nucideal::testing::random_polynomial;

namespace {

const TensorShape kSquare{2, 2};

Monomial mono(const RingPtr& ring, std::string_view text) { return P(text, ring).leading_monomial(); }

}  // namespace

TEST(Grevlex, TieBrokenByLastVariable) {
  auto R = make_ring(kSquare);
  const auto& ord = R->order;
  EXPECT_TRUE(ord.greater(mono(R, "x[1,1]^2"), mono(R, "x[1,1]*x[1,2]")));
  EXPECT_EQ(ord.compare(mono(R, "x[1,2]*x[2,1]"), mono(R, "x[1,2]*x[2,1]")), std::strong_ordering::equal);
  EXPECT_EQ(ord.compare(mono(R, "x[1,1]"), mono(R, "x[2,2]^3")), std::strong_ordering::less);
  EXPECT_TRUE(ord.greater(mono(R, "x[1,2]*x[2,1]"), mono(R, "x[1,1]*x[2,2]")));
  EXPECT_TRUE(ord.greater(mono(R, "x[1,1]"), mono(R, "x[2,2]")));
  EXPECT_TRUE(ord.greater(mono(R, "x[2,2]"), Monomial()));
}

TEST(Grevlex, TotalAndMultiplicative) {
  auto R = make_ring(TensorShape{3, 3});
  std::mt19937_64 rng(11);
  const auto& ord = R->order;
  for (int t = 0; t < 400; ++t) {
    auto a = random_polynomial(R, rng, 1, 4).leading_monomial();
    auto b = random_polynomial(R, rng, 1, 4).leading_monomial();
    auto m = random_polynomial(R, rng, 1, 3).leading_monomial();
    auto ab = ord.compare(a, b);
    EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
    EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
    EXPECT_EQ(ord.compare(a * m, b * m), ab);
  }
}

TEST(EliminationOrder, BlockComparedFirst) {
  // Eliminate x[1,1]: any monomial containing it beats any monomial without it.
  auto R = make_ring(kSquare, MonomialOrder::elimination({true, false, false, false}));
  EXPECT_TRUE(R->order.greater(mono(R, "x[1,1]"), mono(R, "x[2,2]^5")));
  EXPECT_TRUE(R->order.greater(mono(R, "x[1,2]*x[2,1]"), mono(R, "x[2,2]^2")));
}

TEST(PolynomialArith, Examples) {
  auto R = make_ring(TensorShape{1});
  auto x = Polynomial::variable(R, 0);
  auto one = Polynomial::constant(R, 1);
  EXPECT_EQ((x + one) * (x - one), P("x[1]^2 - 1", R));

  auto S = make_ring(kSquare);
  auto minor = P("x[1,2]*x[2,1] - x[1,1]*x[2,2]", S);
  EXPECT_TRUE((minor + Rational(-1) * minor).is_zero());
  EXPECT_EQ(minor * Polynomial::constant(S, 1), minor);
}

TEST(PolynomialArith, RingAxioms) {
  auto R = make_ring(TensorShape{3, 3});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto f = random_polynomial(R, rng, 5, 2);
    auto g = random_polynomial(R, rng, 5, 2);
    auto h = random_polynomial(R, rng, 5, 2);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(PolynomialArith, MixingRingsThrows) {
  auto a = Polynomial::variable(make_ring(kSquare), 0);
  auto b = Polynomial::variable(make_ring(TensorShape{2, 3}), 0);
  EXPECT_THROW((void)(a + b), std::invalid_argument);
}

TEST(LeadingTerm, Examples) {
  auto R = make_ring(kSquare);
  auto minor = P("x[1,2]*x[2,1] - x[2,2]*x[1,1]", R);
  EXPECT_EQ(minor.leading_monomial(), mono(R, "x[1,2]*x[2,1]"));
  EXPECT_EQ(minor.leading_coeff(), 1);

  auto c = Polynomial::constant(R, Rational(7, 3));
  EXPECT_TRUE(c.leading_monomial().is_one());
  EXPECT_EQ(c.leading_coeff(), Rational(7, 3));

  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
    auto S = make_ring(TensorShape(dims));
    auto sphere = power_sphere(S, 2);
    EXPECT_EQ(sphere.leading_monomial(), Monomial::variable(0, 2));
  }
}

TEST(Derivative, Examples) {
  auto R = make_ring(kSquare);
  EXPECT_EQ(P("x[1,2]^2", R).partial_derivative(MultiIndex{1, 2}), P("2*x[1,2]", R));
  EXPECT_TRUE(P("x[1,1]*x[2,2]", R).partial_derivative(MultiIndex{1, 2}).is_zero());
  auto sphere = power_sphere(R, 2);
  for (const auto& b : all_indices(kSquare)) {
    EXPECT_EQ(sphere.partial_derivative(b), Rational(2) * Polynomial::variable(R, b));
  }
}

TEST(Derivative, LinearAndLeibniz) {
  auto R = make_ring(TensorShape{2, 3});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto f = random_polynomial(R, rng, 6, 3);
    auto g = random_polynomial(R, rng, 6, 3);
    VarIndex v = static_cast<VarIndex>(t % 6);
    EXPECT_EQ((f + Rational(3) * g).partial_derivative(v), f.partial_derivative(v) + Rational(3) * g.partial_derivative(v));
    EXPECT_EQ((f * g).partial_derivative(v), f.partial_derivative(v) * g + f * g.partial_derivative(v));
  }
}

TEST(Evaluate, Examples) {
  auto R = make_ring(kSquare);
  auto sphere = power_sphere(R, 2);
  std::vector<Rational> e11{1, 0, 0, 0};
  EXPECT_EQ(sphere.evaluate(e11), 0);
  EXPECT_EQ(Polynomial::constant(R, 1).evaluate(std::vector<Rational>{5, 6, 7, 8}), 1);
  std::map<MultiIndex, Rational> identity{{{1, 1}, 1}, {{1, 2}, 0}, {{2, 1}, 0}, {{2, 2}, 1}};
  EXPECT_EQ(P("x[1,2]*x[2,1] - x[1,1]*x[2,2]", R).evaluate(identity), -1);
  identity.erase(MultiIndex{2, 2});
  EXPECT_THROW(P("x[1,2]*x[2,1] - x[1,1]*x[2,2]", R).evaluate(identity), std::invalid_argument);
}

TEST(Evaluate, DenseDoubleMatchesExact) {
  auto R = make_ring(TensorShape{2, 3});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    auto f = random_polynomial(R, rng, 6, 3);
    std::vector<Rational> q;
    std::vector<double> d;
    for (int i = 0; i < 6; ++i) {
      q.emplace_back(i + 1, 4);
      d.push_back((i + 1) / 4.0);
    }
    EXPECT_NEAR(f.evaluate_dense<double>(std::span<const double>(d)), f.evaluate(q).get_d(), 1e-9);
  }
}

TEST(TextFormat, Canonical) {
  auto R = make_ring(kSquare);
  auto minor = P("x[1,2]*x[2,1] - x[1,1]*x[2,2]", R);
  EXPECT_EQ(format(minor), "x[1,2]*x[2,1] - x[1,1]*x[2,2]");
  EXPECT_EQ(format(P("-x[1,1]*x[2,2] + x[2,1]*x[1,2]", R)), "x[1,2]*x[2,1] - x[1,1]*x[2,2]");
  EXPECT_EQ(format(P("3/2*x[1,1]^2 - 1", R)), "3/2*x[1,1]^2 - 1");
  EXPECT_EQ(format(Polynomial(R)), "0");
  EXPECT_EQ(format(P("x[1,1] - x[1,1]", R)), "0");
}

TEST(TextFormat, RoundTrip) {
  auto R = make_ring(TensorShape{3, 3});
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto f = random_polynomial(R, rng, 6, 4);
    if (t % 3 == 0) f = f * Polynomial::constant(R, Rational(1, 7));
    auto text = format(f);
    auto g = P(text, R);
    EXPECT_EQ(g, f) << text;
    EXPECT_EQ(format(g), text);
  }
}

TEST(TextFormat, SyntaxErrorOffset) {
  auto R = make_ring(kSquare);
  try {
    P("x[1,1", R);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos);
  }
  EXPECT_THROW(P("x[3,1]", R), ParseError);
  EXPECT_THROW(P("x[1,1] +", R), ParseError);
  EXPECT_THROW(P("2 x[1,1]", R), ParseError);
}
