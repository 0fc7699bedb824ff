#include <gtest/gtest.h>

#include <random>

#include "waring/cyclotomic.hpp"
#include "waring/error.hpp"
#include "waring/json_io.hpp"

using namespace waring;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

CyclotomicNumber random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(euler_phi(order));
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return CyclotomicNumber(order, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), ints({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, DegreeIsPhi) {
  for (int n = 1; n <= 60; ++n) {
    EXPECT_EQ(cyclotomic_polynomial(n).size(), static_cast<std::size_t>(euler_phi(n) + 1)) << n;
  }
}

TEST(CyclotomicPolynomial, FirstNonUnitCoefficientAt105) {
  const auto phi = cyclotomic_polynomial(105);
  ASSERT_EQ(phi.size(), 49u);
  EXPECT_EQ(phi[7], -2);
}

TEST(CyclotomicEmbed, Examples) {
  EXPECT_EQ(cyclotomic_embed(2, 1, 2), CyclotomicNumber(-1));
  EXPECT_EQ(cyclotomic_embed(3, 0, 3), CyclotomicNumber(1));
  const auto z3 = cyclotomic_embed(3, 1, 3);
  EXPECT_EQ(z3, CyclotomicNumber::zeta(3));
  EXPECT_FALSE(z3.is_rational());
  EXPECT_EQ(z3 * z3 * z3, CyclotomicNumber(1));
  // z3^2 = -1 - z3
  EXPECT_EQ(z3 * z3, CyclotomicNumber(3, {Rational(-1), Rational(-1)}));
}

TEST(CyclotomicEmbed, IntoLargerField) {
  // zeta_3 inside Q(zeta_6) is zeta_6^2.
  EXPECT_EQ(cyclotomic_embed(3, 1, 6), CyclotomicNumber::zeta(6).pow(2));
  EXPECT_EQ(cyclotomic_embed(3, 1, 6), CyclotomicNumber::zeta(3));
  EXPECT_EQ(cyclotomic_embed(2, 1, 12), CyclotomicNumber(-1));
  EXPECT_EQ(cyclotomic_embed(4, -1, 4), CyclotomicNumber::zeta(4).pow(3));
}

TEST(CyclotomicEmbed, NonDivisorIsError) {
  EXPECT_THROW(cyclotomic_embed(4, 1, 6), DomainError);
  EXPECT_THROW(cyclotomic_embed(5, 2, 12), DomainError);
}

TEST(CyclotomicEmbed, RootsOfUnityUpTo24) {
  for (int n = 1; n <= 24; ++n) {
    std::vector<CyclotomicNumber> roots;
    for (int k = 0; k < n; ++k) {
      const auto z = cyclotomic_embed(n, k, n);
      EXPECT_EQ(z.pow(n), CyclotomicNumber(1)) << n << " " << k;
      for (const auto& seen : roots) EXPECT_FALSE(seen == z) << n << " " << k;
      roots.push_back(z);
    }
  }
}

TEST(CyclotomicNumber, ZetaToTheOrderIsOne) {
  for (int n : {5, 7, 9, 10, 15, 35, 60}) {
    EXPECT_EQ(CyclotomicNumber::zeta(n).pow(n), CyclotomicNumber(1)) << n;
    EXPECT_FALSE(CyclotomicNumber::zeta(n).pow(n - 1) == CyclotomicNumber(1)) << n;
  }
}

TEST(CyclotomicNumber, CanonicalRepresentation) {
  // 1 + z4^2 reduces to 0 in Q(i).
  const CyclotomicNumber x(4, {Rational(1), Rational(0), Rational(1)});
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x.coefficients().size(), 2u);
  const CyclotomicNumber y(3, {Rational(0), Rational(0), Rational(0), Rational(5)});
  EXPECT_EQ(y, CyclotomicNumber(5));
}

TEST(CyclotomicNumber, MixedOrdersLift) {
  const auto i = CyclotomicNumber::zeta(4);
  const auto w = CyclotomicNumber::zeta(3);
  const auto p = i * w;
  EXPECT_EQ(p.order(), 12);
  EXPECT_EQ(p.pow(12), CyclotomicNumber(1));
  EXPECT_EQ(w.lift(12), w);
  EXPECT_EQ((i + w) - w, i);
}

TEST(CyclotomicNumber, RationalView) {
  EXPECT_TRUE(CyclotomicNumber(Rational(3, 4), 7).is_rational());
  EXPECT_EQ(CyclotomicNumber(Rational(3, 4), 7).rational_value(), Rational(3, 4));
  EXPECT_THROW(CyclotomicNumber::zeta(5).rational_value(), DomainError);
  const auto w = CyclotomicNumber::zeta(3);
  EXPECT_EQ((w + w * w).rational_value(), Rational(-1));
}

TEST(CyclotomicNumber, InverseOfZeroThrows) {
  EXPECT_THROW(CyclotomicNumber().inverse(), DomainError);
  EXPECT_THROW(CyclotomicNumber(0, 5) / CyclotomicNumber(0, 5), DomainError);
}

TEST(CyclotomicNumber, FieldAxiomsRandomized) {
  std::mt19937_64 rng(20261016);
  for (int order : {1, 3, 4, 5, 7, 8, 9, 12, 15, 20}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = random_element(rng, order);
      const auto b = random_element(rng, order);
      const auto c = random_element(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, CyclotomicNumber());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CyclotomicNumber(1));
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(CyclotomicNumber, MixedOrderAxiomsRandomized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(rng, 4);
    const auto b = random_element(rng, 6);
    const auto c = random_element(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(CyclotomicNumber, ComplexValue) {
  const auto [re, im] = CyclotomicNumber::zeta(4).to_complex();
  EXPECT_NEAR(re, 0.0, 1e-12);
  EXPECT_NEAR(im, 1.0, 1e-12);
  const auto [re3, im3] = (CyclotomicNumber::zeta(3) * Rational(2)).to_complex();
  EXPECT_NEAR(re3, -1.0, 1e-12);
  EXPECT_NEAR(im3, std::sqrt(3.0), 1e-12);
}

TEST(CyclotomicNumber, RootOfUnityExponent) {
  Rational scale;
  EXPECT_EQ(root_of_unity_exponent(CyclotomicNumber::zeta(9).pow(4).scaled(Rational(1, 9)), &scale), 4);
  EXPECT_EQ(scale, Rational(1, 9));
  EXPECT_EQ(root_of_unity_exponent(CyclotomicNumber(Rational(-2))), 0);
  EXPECT_EQ(root_of_unity_exponent(CyclotomicNumber::zeta(3) + CyclotomicNumber(2)), -1);
}

TEST(CyclotomicNumber, Printing) {
  EXPECT_EQ(to_string(CyclotomicNumber(Rational(-3, 8))), "-3/8");
  EXPECT_EQ(to_string(CyclotomicNumber::zeta(3).scaled(Rational(1, 9))), "1/9*z3");
  EXPECT_EQ(to_string(CyclotomicNumber::zeta(5).pow(2)), "z5^2");
}

TEST(CyclotomicNumber, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int order : {1, 3, 8, 15}) {
    const auto x = random_element(rng, order);
    const Json j = to_json(x);
    EXPECT_EQ(j["order"], order);
    EXPECT_EQ(j["coeffs"].size(), static_cast<std::size_t>(euler_phi(order)));
    EXPECT_EQ(cyclotomic_from_json(j), x);
    EXPECT_EQ(cyclotomic_from_json(Json::parse(j.dump())), x);
  }
  EXPECT_THROW(cyclotomic_from_json(Json{{"order", 3}}), ValidationError);
  EXPECT_THROW(cyclotomic_from_json(Json{{"order", 3}, {"coeffs", {"1", "x"}}}), ValidationError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_EQ(binomial(9, 7), 36);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(checked_mul(1ull << 40, 1ull << 40), ResourceError);
}
