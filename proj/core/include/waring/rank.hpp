#pragma once

#include <cstdint>
#include <vector>

#include "waring/forms.hpp"

namespace waring {

using RankValue = std::uint64_t;

/// Waring rank of a monomial: 1 for one variable, otherwise the product of
/// (a_i + 1) over all exponents but the smallest.
RankValue rank_monomial(const Monomial& m);

/// Rank of a sum of pairwise coprime monomials: 1 in degree 1, otherwise the
/// sum of the monomial ranks.
RankValue rank_coprime_sum(const CoprimeForm& form);

struct GenericRank {
  RankValue value = 0;
  /// Set on the Alexander-Hirschowitz exceptions (d = 2 with n >= 2, and
  /// (n, d) in {(3,4), (4,4), (5,4), (5,3)}) where the true generic rank is
  /// larger than `value`.
  bool exceptional = false;
};

/// ceil(C(d+n-1, d) / n) for forms of degree d in n variables.
GenericRank generic_rank(unsigned n, unsigned d);

struct MonomialRankWitness {
  RankValue value = 0;
  Monomial witness;
};

/// Largest rank of a degree-d monomial in three variables, d > 2, with the
/// monomial achieving it. Throws DomainError for d <= 2.
MonomialRankWitness max_monomial_rank_3vars(int d);

struct SurveyRow {
  std::vector<int> exponents;  // ascending
  RankValue rank = 0;
};

struct SurveyResult {
  RankValue value = 0;
  Monomial witness;
  std::vector<SurveyRow> table;
};

inline constexpr std::uint64_t kDefaultSurveyCap = 1'000'000;

/// Number of ways to write d as a sum of at most n positive parts.
std::uint64_t count_partitions(unsigned d, unsigned n);

/// Exhaustive scan of all monomials of degree d in at most n variables (one
/// per ascending exponent vector). Throws ResourceError when the number of
/// exponent vectors exceeds `cap`. Ties keep the first maximum in scan order
/// (fewer variables first, then lexicographic).
SurveyResult survey_max_monomial_rank(unsigned n, unsigned d, std::uint64_t cap = kDefaultSurveyCap);

struct RatioRow {
  unsigned k = 0;
  unsigned degree = 0;
  RankValue monomial_rank = 0;
  GenericRank generic;
  Rational ratio;
};

struct RatioReport {
  unsigned n = 0;
  /// n! / (n-1)^(n-1)
  Rational limit;
  std::vector<RatioRow> rows;
};

/// For d = (n-1)k + 1, k = 1..k_max: rank of x1 x2^k ... xn^k against the
/// generic rank, with their exact ratio.
RatioReport asymptotic_ratio_report(unsigned n, unsigned k_max);

}  // namespace waring
