#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace nucideal;
using nucideal::testing::P;

namespace {

const TensorShape kShape{3, 3};
const std::vector<MultiIndex> kJ{{1, 1}, {1, 2}, {2, 1}, {3, 1}};
const MultiIndex kA{2, 2};

UnivariateOverField U(const RingPtr& R, std::string_view text) { return as_univariate(P(text, R), kA, kJ); }

}  // namespace

TEST(AsUnivariate, MinorInA) {
  auto R = make_ring(TensorShape{2, 2});
  std::vector<MultiIndex> J{{1, 1}, {1, 2}, {2, 1}};
  auto u = as_univariate(P("x[1,1]*x[2,2] - x[1,2]*x[2,1]", R), MultiIndex{2, 2}, J);
  EXPECT_EQ(u.degree(), 1);
  EXPECT_EQ(u.coeffs()[0], P("-x[1,2]*x[2,1]", R));
  EXPECT_EQ(u.coeffs()[1], P("x[1,1]", R));
  EXPECT_EQ(u.to_polynomial(), P("x[1,1]*x[2,2] - x[1,2]*x[2,1]", R));
}

TEST(AsUnivariate, ConstantAndTwoTerm) {
  auto R = make_ring(kShape);
  EXPECT_EQ(U(R, "1").degree(), 0);
  auto u = U(R, "x[1,1]^2*x[2,2]^4 + x[2,1]^2*x[2,2]^4 - x[1,2]^2");
  EXPECT_EQ(u.degree(), 4);
  int nonzero = 0;
  for (const auto& c : u.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  EXPECT_EQ(nonzero, 2);
}

TEST(AsUnivariate, ForeignVariable) {
  auto R = make_ring(kShape);
  EXPECT_THROW(U(R, "x[3,3]*x[2,2]"), std::invalid_argument);
}

TEST(GcdInK, Examples) {
  auto R = make_ring(kShape);
  auto u = U(R, "x[2,2]^2 - x[1,2]*x[3,1]");
  EXPECT_EQ(gcd_in_k(u, u.derivative()).degree(), 0);
  EXPECT_EQ(gcd_in_k(u, u).degree(), 2);
  EXPECT_EQ(gcd_in_k(u, u).to_polynomial(), u.to_polynomial());

  auto sq = U(R, "x[2,2]^2 - 2*x[1,1]*x[2,2] + x[1,1]^2");
  auto g = gcd_in_k(sq, sq.derivative());
  EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(g.to_polynomial(), P("x[2,2] - x[1,1]", R));
}

TEST(GcdInK, CommonFactorWithParameters) {
  auto R = make_ring(kShape);
  // (x_a - c)(x_a + e) and (x_a - c)(x_a^2 + 1) share exactly x_a - c.
  auto c = P("x[1,1]*x[1,2]", R);
  auto xa = Polynomial::variable(R, kA);
  auto lin = xa - c;
  auto u = as_univariate(lin * (xa + P("x[2,1]", R)), kA, kJ);
  auto v = as_univariate(lin * (xa * xa + Polynomial::constant(R, 1)), kA, kJ);
  auto g = gcd_in_k(u, v);
  ASSERT_EQ(g.degree(), 1);
  EXPECT_EQ(g.to_polynomial(), lin);
}

TEST(GcdInK, DividesBoth) {
  auto R = make_ring(kShape);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto xa = Polynomial::variable(R, kA);
  auto rand_param = [&] {
    Polynomial out(R);
    for (const auto& b : kJ) out = out + Rational(coeff(rng)) * Polynomial::variable(R, b);
    return out + Polynomial::constant(R, coeff(rng));
  };
  for (int t = 0; t < 25; ++t) {
    auto common = xa - rand_param();
    auto f = common * (xa * xa + rand_param()) ;
    auto h = common * (xa + rand_param());
    auto u = as_univariate(f, kA, kJ);
    auto v = as_univariate(h, kA, kJ);
    auto g = gcd_in_k(u, v);
    EXPECT_GE(g.degree(), 1);
    EXPECT_TRUE(pseudo_remainder(u, g).is_zero());
    EXPECT_TRUE(pseudo_remainder(v, g).is_zero());
  }
}

TEST(GcdInK, UnitInvariance) {
  auto R = make_ring(kShape);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> coeff(1, 4);
  auto xa = Polynomial::variable(R, kA);
  for (int t = 0; t < 20; ++t) {
    auto c = Rational(coeff(rng)) * P("x[1,1]", R) + Rational(coeff(rng)) * P("x[3,1]", R);
    auto unit = P("x[1,2]^2 + 1", R) * Rational(coeff(rng));
    auto u = as_univariate((xa - c) * (xa + c) * (xa - P("x[2,1]", R)), kA, kJ);
    auto v = as_univariate((xa - c) * (xa + Polynomial::constant(R, coeff(rng))), kA, kJ);
    int base = gcd_in_k(u, v).degree();
    EXPECT_EQ(gcd_in_k(u.scaled(unit), v).degree(), base);
    EXPECT_EQ(gcd_in_k(u, v.scaled(unit)).degree(), base);
  }
}

TEST(StronglySquarefree, Examples) {
  auto R2 = make_ring(TensorShape{2, 2});
  std::vector<MultiIndex> J{{1, 1}, {1, 2}, {2, 1}};
  EXPECT_TRUE(is_strongly_squarefree(P("x[1,1]*x[2,2] - x[1,2]*x[2,1]", R2), MultiIndex{2, 2}, J));

  auto R = make_ring(kShape);
  EXPECT_FALSE(is_strongly_squarefree(P("x[2,2] - x[1,2]", R).pow(2), kA, kJ));
  EXPECT_TRUE(is_strongly_squarefree(P("x[1,1]^2*x[2,2]^2 + x[1,2]^2*x[2,2]^2 - x[2,1]^2", R), kA, kJ));
  EXPECT_TRUE(is_strongly_squarefree(P("x[1,1]^4*x[2,2]^4 - x[3,1]^6", R), kA, kJ));
}

TEST(StronglySquarefree, ProductsOfDistinctRoots) {
  auto R = make_ring(kShape);
  auto xa = Polynomial::variable(R, kA);
  for (int k = 1; k <= 5; ++k) {
    Polynomial u = Polynomial::constant(R, 1);
    for (int r = 0; r < k; ++r) u = u * (xa - Polynomial::constant(R, Rational(r * r + 1, r + 2)));
    EXPECT_TRUE(is_strongly_squarefree(u, kA, kJ)) << k;
    EXPECT_FALSE(is_strongly_squarefree(u * u, kA, kJ)) << k;
  }
}

TEST(ExactDivision, Multivariate) {
  auto R = make_ring(kShape);
  auto f = P("x[1,1]^2 - x[1,2]^2", R);
  EXPECT_EQ(divide_exact(f, P("x[1,1] - x[1,2]", R)), P("x[1,1] + x[1,2]", R));
  EXPECT_THROW(divide_exact(f, P("x[2,1]", R)), std::domain_error);
  EXPECT_EQ(multivariate_gcd(f, P("x[1,1]^2 - 2*x[1,1]*x[1,2] + x[1,2]^2", R)), P("x[1,1] - x[1,2]", R));
}
