#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/cyclotomic.hpp"
#include "waring/forms.hpp"
#include "waring/rank.hpp"

namespace waring {

/// One summand gamma * L^d.
struct DecompositionTerm {
  CyclotomicNumber gamma;
  std::vector<CyclotomicNumber> linear;  // over the decomposition's variables
  std::size_t block = 0;                 // index of the source monomial
  /// Coordinates of the apolar point, one per variable of the source
  /// monomial in namespace order. The least-exponent variable carries 1.
  std::vector<CyclotomicNumber> point;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct PowerSumDecomposition {
  int degree = 0;
  std::vector<std::string> variables;
  std::vector<DecompositionTerm> terms;

  std::size_t size() const { return terms.size(); }
  /// sum gamma_j L_j^d, expanded exactly.
  Polynomial expand() const;

  friend bool operator==(const PowerSumDecomposition&, const PowerSumDecomposition&) = default;
};

/// Points [1 : e(2) : ... : e(n)] with e(i) running over the (a_i+1)-th roots
/// of unity, exponents taken in ascending order. Each point is a vector of
/// root exponents k_i (e(i) = zeta_{a_i+1}^{k_i}), listed in lexicographic
/// order; positions follow Monomial::sorted_positions().
std::vector<std::vector<int>> decomposition_root_exponents(const Monomial& m);

/// Same points as coordinates in Q(zeta_N), N = field_order_for(m), aligned
/// with m.support() (namespace order).
std::vector<std::vector<CyclotomicNumber>> decomposition_points(const Monomial& m);

/// lcm of a_i + 1 over all exponents but the least one; 1 for one variable.
int field_order_for(const Monomial& m);

/// Decomposes coefficient * m over the points above by an exact linear
/// solve. Linear forms live in m's namespace. Throws InternalError if the
/// system is not uniquely solvable.
PowerSumDecomposition solve_gammas(const Monomial& m, const Rational& coefficient,
                                   std::span<const std::string> variables = {});

/// Concatenates solve_gammas over the monomials of F. For degree 1 the
/// single term is F itself.
PowerSumDecomposition decompose_form(const CoprimeForm& form);

struct VerificationReport {
  bool degree_matches = false;
  bool expansion_exact = false;
  std::size_t mismatch_count = 0;
  std::string first_mismatch;  // "monomial: expected X, got Y"
  bool blocks_independent = false;
  std::vector<std::pair<std::size_t, std::size_t>> dependent_pairs;
  std::size_t term_count = 0;
  RankValue expected_rank = 0;
  bool count_matches = false;

  bool passed() const { return degree_matches && expansion_exact && blocks_independent && count_matches; }
};

VerificationReport verify_decomposition(const CoprimeForm& form, const PowerSumDecomposition& decomposition);

struct LeastVariableReport {
  std::vector<bool> term_passes;
  std::vector<std::string> failures;

  bool passed() const;
};

/// Every term of block i must have a nonzero coefficient on the
/// least-exponent variable of M_i. In degree 1 the single term is checked
/// against every block.
LeastVariableReport least_variable_check(const CoprimeForm& form, const PowerSumDecomposition& decomposition);

/// True when the two vectors are proportional (including a zero vector).
bool linearly_dependent(std::span<const CyclotomicNumber> a, std::span<const CyclotomicNumber> b);

}  // namespace waring
