#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "waring/apolarity.hpp"
#include "waring/error.hpp"
#include "waring/forms.hpp"
#include "waring/json_io.hpp"

using namespace waring;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_form(text);
  } catch (const WaringError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseForm, WellFormed) {
  const CoprimeForm f = parse_form("x1^2*x2 + x3^3");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(f.monomials()[0].full_exponents(), (Exponents{2, 1, 0}));
  EXPECT_EQ(f.monomials()[1].full_exponents(), (Exponents{0, 0, 3}));
}

TEST(ParseForm, GrammarVariants) {
  const CoprimeForm f = parse_form("3/2*x*y*z");
  EXPECT_EQ(f.coefficients()[0], Rational(3, 2));
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"x", "y", "z"}));

  const CoprimeForm g = parse_form("a^2*b - 5*c^3");
  EXPECT_EQ(g.coefficients(), (std::vector<Rational>{1, -5}));
  EXPECT_EQ(g.degree(), 3);

  const CoprimeForm h = parse_form("  x10 ^ 2 +x2*x9 ");
  EXPECT_EQ(h.variables(), (std::vector<std::string>{"x2", "x9", "x10"}));

  EXPECT_EQ(parse_form("-x1*x2").coefficients()[0], Rational(-1));
}

TEST(ParseForm, Errors) {
  EXPECT_NE(error_of("x1*x2 + x2*x3").find("x2"), std::string::npos);
  EXPECT_NE(error_of("x1*x2 + x2*x3").find("coprime"), std::string::npos);
  EXPECT_NE(error_of("x1^2 + x2^3").find("2 vs 3"), std::string::npos);
  EXPECT_THROW(parse_form("x1^2 + x2^3"), ValidationError);
  EXPECT_THROW(parse_form("x1 + x1"), ValidationError);
  EXPECT_THROW(parse_form("0*x1"), ValidationError);
  EXPECT_THROW(parse_form("7"), WaringError);
}

TEST(ParseForm, ParseErrorsCarryPosition) {
  for (const char* bad : {"x1 +", "x1 ** x2", "x1^", "2/0*x", "x1 x2", "(x1)", "", "x^-1", "xy"}) {
    try {
      parse_form(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << bad;
    } catch (const ValidationError&) {
      // Semantically invalid, e.g. a zero denominator.
    }
  }
}

TEST(ParseForm, NamespaceIsMinimal) {
  const CoprimeForm f = parse_form("x1^3");
  EXPECT_EQ(f.num_vars(), 1u);
  const CoprimeForm wide({"x1", "x2", "x3", "x4", "x5"}, {Monomial(5, {0}, {3})}, {1});
  const CoprimeForm narrow = drop_unused_variables(wide);
  EXPECT_EQ(narrow.variables(), (std::vector<std::string>{"x1"}));
  EXPECT_EQ(narrow.monomials()[0].full_exponents(), (Exponents{3}));
  EXPECT_EQ(drop_unused_variables(narrow), narrow);
}

TEST(ParseForm, RenderRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const CoprimeForm f = oracle::random_coprime_form(rng, 1 + trial % 6, 3, 8);
    EXPECT_EQ(parse_form(render(f)), f) << render(f);
    EXPECT_EQ(form_from_json(to_json(f)), f);
    EXPECT_EQ(form_from_json(Json::parse(to_json(f).dump())), f);
  }
  for (const char* text : {"x1^2*x2 + x3^3", "-1/3*a*b^2 + 4*c^3", "x"}) {
    const CoprimeForm f = parse_form(text);
    EXPECT_EQ(parse_form(render(f)), f) << text;
  }
}

TEST(ParseExpression, AcceptsGeneralPolynomials) {
  const ParsedExpression e = parse_expression("x1*x2 + x2*x3 - x1*x2");
  EXPECT_EQ(e.terms.size(), 3u);
  const Polynomial p = e.to_polynomial();
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient({0, 1, 1}), CyclotomicNumber(1));
}

TEST(Monomial, SortedViewAndLeastVariable) {
  const Monomial m(4, {3, 0, 2}, {2, 5, 1});
  EXPECT_EQ(m.support(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(m.exponents(), (std::vector<int>{5, 1, 2}));
  EXPECT_EQ(m.sorted_exponents(), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(m.least_variable(), 2u);
  EXPECT_EQ(m.degree(), 8);

  // Ties go to the first variable in namespace order.
  const Monomial t(3, {2, 0, 1}, {1, 1, 1});
  EXPECT_EQ(t.least_variable(), 0u);

  const Monomial z = Monomial::from_exponents({0, 3, 0, 1});
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.least_variable(), 3u);
}

TEST(Perp, Generators) {
  const MonomialIdeal j = perp_generators(Monomial::from_exponents({1, 1, 1}));
  EXPECT_EQ(j, MonomialIdeal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(perp_generators(Monomial::from_exponents({5})), MonomialIdeal(1, {{6}}));
  const Monomial m = Monomial::from_exponents({1, 3});
  EXPECT_EQ(perp_generators(m), MonomialIdeal(2, {{2, 0}, {0, 4}}));
}

TEST(Perp, GeneratorsAnnihilateSurveyedMonomials) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 7; ++d) {
      for (const auto& e : monomials_of_degree(n, d)) {
        const Monomial m = Monomial::from_exponents(e);
        const Polynomial target = m.to_polynomial();
        const MonomialIdeal perp = perp_generators(m);
        for (const auto& g : perp.generators()) {
          EXPECT_TRUE(apply_differential(Polynomial::monomial(g), target).is_zero());
        }
      }
    }
  }
}

TEST(CiPointIdeal, Examples) {
  {
    const auto b = ci_point_ideal(Monomial::from_exponents({1, 1}));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], Polynomial::monomial({0, 2}) - Polynomial::monomial({2, 0}));
  }
  {
    const Monomial m = Monomial::from_exponents({1, 2});
    const auto b = ci_point_ideal(m);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], Polynomial::monomial({0, 3}) - Polynomial::monomial({3, 0}));
    EXPECT_TRUE(annihilator_membership(b[0], m.to_polynomial()));
  }
  {
    const auto b = ci_point_ideal(Monomial::from_exponents({2, 2, 3}));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0], Polynomial::monomial({0, 3, 0}) - Polynomial::monomial({3, 0, 0}));
    EXPECT_EQ(b[1], Polynomial::monomial({0, 0, 4}) - Polynomial::monomial({4, 0, 0}));
  }
  EXPECT_TRUE(ci_point_ideal(Monomial::from_exponents({4})).empty());
}

TEST(CiPointIdeal, UsesLeastExponentVariable) {
  // x1^3 x2: X1 carries the largest exponent, X2 is the least.
  const auto b = ci_point_ideal(Monomial::from_exponents({3, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], Polynomial::monomial({4, 0}) - Polynomial::monomial({0, 4}));
}

TEST(CiPointIdeal, AnnihilatesEveryMonomial) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 8; ++d) {
      for (const auto& e : monomials_of_degree(n, d)) {
        const Monomial m = Monomial::from_exponents(e);
        const Polynomial target = m.to_polynomial();
        for (const auto& g : ci_point_ideal(m)) EXPECT_TRUE(apply_differential(g, target).is_zero());
      }
    }
  }
}

TEST(MonomialIdeal, MinimalGenerators) {
  const MonomialIdeal j(2, {{2, 1}, {1, 0}, {0, 3}, {1, 2}});
  EXPECT_EQ(j, MonomialIdeal(2, {{0, 3}, {1, 0}}));
  EXPECT_EQ(j.generators().size(), 2u);
  EXPECT_TRUE(j.contains({3, 0}));
  EXPECT_FALSE(j.contains({0, 2}));
  EXPECT_EQ(MonomialIdeal::maximal(3).generators().size(), 3u);
}

TEST(ParseIdeals, SharedNamespace) {
  const std::vector<std::string> texts = {"x1, x2^2", "x1^2, x2, x3"};
  const ParsedIdeals p = parse_ideals(texts);
  EXPECT_EQ(p.variables, (std::vector<std::string>{"x1", "x2", "x3"}));
  ASSERT_EQ(p.ideals.size(), 2u);
  EXPECT_EQ(p.ideals[0], MonomialIdeal(3, {{1, 0, 0}, {0, 2, 0}}));
  const std::vector<std::string> bad = {"x1 +"};
  EXPECT_THROW(parse_ideals(bad), ParseError);
}
