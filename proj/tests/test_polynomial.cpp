#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "waring/linear_system.hpp"
#include "waring/polynomial.hpp"

using namespace waring;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  Rational q(std::uniform_int_distribution<int>(-7, 7)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
  q.canonicalize();
  return q;
}

std::vector<CyclotomicNumber> cyc(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(MonomialsOfDegree, CountAndOrder) {
  const auto m = monomials_of_degree(3, 3);
  ASSERT_EQ(m.size(), 10u);
  EXPECT_EQ(m.front(), (Exponents{3, 0, 0}));
  EXPECT_EQ(m.back(), (Exponents{0, 0, 3}));
  EXPECT_TRUE(std::is_sorted(m.begin(), m.end(), std::greater<>()));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 6; ++d) {
      EXPECT_EQ(Integer(monomials_of_degree(n, d).size()), binomial(d + n - 1, d));
    }
  }
}

TEST(PolyPowLinear, Examples) {
  const Polynomial sq = poly_pow_linear(cyc({1, 1}), 2);
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient({2, 0}), CyclotomicNumber(1));
  EXPECT_EQ(sq.coefficient({1, 1}), CyclotomicNumber(2));
  EXPECT_EQ(sq.coefficient({0, 2}), CyclotomicNumber(1));

  const Polynomial cube = poly_pow_linear(cyc({1, 1, 1}), 3);
  EXPECT_EQ(cube.size(), 10u);
  EXPECT_EQ(cube.coefficient({1, 1, 1}), CyclotomicNumber(6));

  const Polynomial signed_cube = poly_pow_linear(cyc({1, -1, -1}), 3);
  EXPECT_EQ(signed_cube.coefficient({1, 1, 1}), CyclotomicNumber(6));
  EXPECT_EQ(signed_cube.coefficient({0, 0, 3}), CyclotomicNumber(-1));
}

TEST(PolyPowLinear, ZeroInputGivesZero) {
  EXPECT_TRUE(poly_pow_linear(cyc({0, 0, 0}), 4).is_zero());
  const Polynomial partial = poly_pow_linear(cyc({0, 2, 0}), 3);
  EXPECT_EQ(partial.size(), 1u);
  EXPECT_EQ(partial.coefficient({0, 3, 0}), CyclotomicNumber(8));
}

TEST(PolyPowLinear, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(11);
  const auto w = CyclotomicNumber::zeta(3);
  const auto i = CyclotomicNumber::zeta(4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<CyclotomicNumber> l(n);
    for (auto& c : l) {
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: c = 0; break;
        case 1: c = w.pow(trial); break;
        case 2: c = i * random_rational(rng); break;
        default: c = random_rational(rng);
      }
    }
    const int d = 1 + trial % 6;
    EXPECT_EQ(poly_pow_linear(l, d), oracle::power_by_multiplication(l, d)) << trial;
  }
}

TEST(PolyPowLinear, EvaluationScalarFirst) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<CyclotomicNumber> l(n), p(n);
    for (auto& c : l) c = random_rational(rng);
    for (auto& c : p) c = random_rational(rng);
    CyclotomicNumber dot;
    for (std::size_t j = 0; j < n; ++j) dot += l[j] * p[j];
    const int d = 1 + trial % 7;
    EXPECT_EQ(poly_pow_linear(l, d).evaluate(p), dot.pow(d));
  }
}

TEST(Polynomial, ZeroTermsNeverStored) {
  Polynomial p(2);
  p.add_term({1, 1}, 3);
  p.add_term({1, 1}, -3);
  EXPECT_TRUE(p.is_zero());
  const Polynomial x = Polynomial::variable(2, 0);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x - x).size(), 0u);
}

TEST(Polynomial, HomogeneousDegree) {
  const Polynomial f = poly_pow_linear(cyc({1, 2}), 4);
  EXPECT_EQ(f.homogeneous_degree(), 4);
  const Polynomial g = f + Polynomial::variable(2, 0);
  EXPECT_FALSE(g.homogeneous_degree().has_value());
  EXPECT_FALSE(g.is_homogeneous());
  EXPECT_TRUE(Polynomial(2).is_homogeneous());
}

TEST(ApplyDifferential, Examples) {
  // X^2 on x^3 gives 6x.
  const Polynomial r = apply_differential(Polynomial::monomial({2}), Polynomial::monomial({3}));
  EXPECT_EQ(r, Polynomial::monomial({1}, 6));
  // X1 X2 on x1^2 x2^2 gives 4 x1 x2.
  EXPECT_EQ(apply_differential(Polynomial::monomial({1, 1}), Polynomial::monomial({2, 2})),
            Polynomial::monomial({1, 1}, 4));
  // X1^2 on x1 x2 x3 vanishes.
  EXPECT_TRUE(apply_differential(Polynomial::monomial({2, 0, 0}), Polynomial::monomial({1, 1, 1})).is_zero());
}

TEST(ApplyDifferential, ContractionLaw) {
  for (int m = 0; m <= 8; ++m) {
    for (int k = 0; k <= 10; ++k) {
      const Polynomial r = apply_differential(Polynomial::monomial({k}), Polynomial::monomial({m}));
      if (k > m) {
        EXPECT_TRUE(r.is_zero());
      } else {
        EXPECT_EQ(r, Polynomial::monomial({m - k}, CyclotomicNumber(oracle::falling(m, k))));
      }
    }
  }
}

TEST(ApplyDifferential, Bilinear) {
  const Polynomial op = Polynomial::monomial({1, 0}, 2) + Polynomial::monomial({0, 1}, -1);
  const Polynomial f = poly_pow_linear(cyc({1, 3}), 3);
  const Polynomial g = Polynomial::monomial({2, 1}, 5);
  EXPECT_EQ(apply_differential(op, f + g), apply_differential(op, f) + apply_differential(op, g));
  EXPECT_EQ(apply_differential(op.scaled(3), f), apply_differential(op, f).scaled(3));
}

TEST(LinearSystem, Identity) {
  LinearSystem s;
  s.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  s.rhs = {CyclotomicNumber(Rational(1, 2)), CyclotomicNumber::zeta(3), 7};
  const auto out = solve_exact(s);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.solution, s.rhs);
}

TEST(LinearSystem, FourPointCubeSystem) {
  // Columns: cubes of x0 + s1 x1 + s2 x2 for the sign vectors in lex order.
  const std::vector<std::vector<int>> signs = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
  const auto rows = monomials_of_degree(3, 3);
  LinearSystem s;
  s.matrix.assign(rows.size(), std::vector<CyclotomicNumber>(4));
  s.rhs.assign(rows.size(), 0);
  for (std::size_t c = 0; c < 4; ++c) {
    const Polynomial p = poly_pow_linear(cyc({signs[c][0], signs[c][1], signs[c][2]}), 3);
    for (std::size_t r = 0; r < rows.size(); ++r) s.matrix[r][c] = p.coefficient(rows[r]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == Exponents{1, 1, 1}) s.rhs[r] = 1;
  }
  const auto out = solve_exact(s);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.solution, (std::vector<CyclotomicNumber>{Rational(1, 24), Rational(-1, 24), Rational(-1, 24),
                                                           Rational(1, 24)}));
}

TEST(LinearSystem, CubeRootSystem) {
  // Rows x^3, x^2 y, x y^2, y^3; columns (x + e y)^3 for e = 1, z3, z3^2.
  const auto w = CyclotomicNumber::zeta(3);
  LinearSystem s;
  s.matrix.assign(4, std::vector<CyclotomicNumber>(3));
  for (int c = 0; c < 3; ++c) {
    const auto e = w.pow(c);
    s.matrix[0][c] = 1;
    s.matrix[1][c] = e * 3;
    s.matrix[2][c] = e * e * 3;
    s.matrix[3][c] = e * e * e;
  }
  s.rhs = {0, 0, 1, 0};
  const auto out = solve_exact(s);
  ASSERT_TRUE(out.ok());
  for (int c = 0; c < 3; ++c) EXPECT_EQ(out.solution[c], w.pow(c).scaled(Rational(1, 9)));
}

TEST(LinearSystem, InconsistentReportsRow) {
  LinearSystem s;
  s.matrix = {{1, 1}, {1, -1}, {2, 0}, {1, 0}};
  s.rhs = {2, 0, 2, 5};
  const auto out = solve_exact(s);
  EXPECT_EQ(out.status, SolveStatus::kInconsistent);
  EXPECT_EQ(out.failing_row, 3u);
}

TEST(LinearSystem, Underdetermined) {
  LinearSystem s;
  s.matrix = {{1, 2, 3}, {2, 4, 6}};
  s.rhs = {1, 2};
  const auto out = solve_exact(s);
  EXPECT_EQ(out.status, SolveStatus::kUnderdetermined);
  EXPECT_EQ(out.rank, 1u);
  EXPECT_TRUE(out.solution.empty());
}

TEST(LinearSystem, DimensionMismatchThrows) {
  LinearSystem s;
  s.matrix = {{1, 2}, {3, 4}};
  s.rhs = {1};
  EXPECT_THROW(solve_exact(s), DomainError);
}

TEST(LinearSystem, SolutionReproducesRhs) {
  std::mt19937_64 rng(99);
  const auto w = CyclotomicNumber::zeta(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 1 + trial % 5;
    const std::size_t rows = cols + trial % 3;
    std::vector<CyclotomicNumber> x(cols);
    for (std::size_t j = 0; j < cols; ++j) x[j] = w.pow(j) * random_rational(rng) + random_rational(rng);
    LinearSystem s;
    s.matrix.assign(rows, std::vector<CyclotomicNumber>(cols));
    for (auto& row : s.matrix) {
      for (auto& a : row) a = random_rational(rng) + w * random_rational(rng);
    }
    s.rhs.assign(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < cols; ++j) s.rhs[r] += s.matrix[r][j] * x[j];
    }
    const auto out = solve_exact(s);
    if (!out.ok()) {
      EXPECT_EQ(out.status, SolveStatus::kUnderdetermined);
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      CyclotomicNumber lhs;
      for (std::size_t j = 0; j < cols; ++j) lhs += s.matrix[r][j] * out.solution[j];
      EXPECT_EQ(lhs, s.rhs[r]);
    }
  }
}

TEST(ExactRank, AgreesWithOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 6;
    const std::size_t cols = 1 + (trial / 6) % 6;
    Matrix<Rational> m(rows, std::vector<Rational>(cols));
    for (auto& row : m) {
      for (auto& a : row) a = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Rational(0) : random_rational(rng);
    }
    // Make some rows dependent.
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m[2][j] = m[0][j] * 3 - m[1][j];
    }
    EXPECT_EQ(exact_rank(m), oracle::rank(m));
  }
}
