#pragma once

#include <optional>
#include <vector>

#include "waring/forms.hpp"
#include "waring/linear_system.hpp"

namespace waring {

/// Matrix of the map T_t -> S_{d-t}, operator |-> operator(F). Entry (row,
/// col) is the coefficient of rows[row] in cols[col] applied to F.
struct CatalecticantMatrix {
  int t = 0;
  std::vector<Exponents> rows;  // degree d - t monomials
  std::vector<Exponents> cols;  // degree t operators
  Matrix<Rational> entries;

  std::size_t rank() const { return exact_rank(entries); }
};

/// Requires a homogeneous polynomial with rational coefficients.
CatalecticantMatrix catalecticant(const Polynomial& form, int t);

/// max over 1 <= t <= t_max of the catalecticant rank; t_max defaults to the
/// degree. Always at least 1 for a nonzero form.
std::size_t catalecticant_lower_bound(const Polynomial& form, std::optional<int> t_max = std::nullopt);
std::size_t catalecticant_lower_bound(const CoprimeForm& form, std::optional<int> t_max = std::nullopt);

/// Number of degree-t monomials outside J.
std::uint64_t hf_monomial_quotient(const MonomialIdeal& ideal, int t);

struct HilbertFunctionTable {
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> partial_sums;

  std::uint64_t total() const { return partial_sums.empty() ? 0 : partial_sums.back(); }
};

HilbertFunctionTable hilbert_function_table(const MonomialIdeal& ideal, int t_max);

/// A degree t with HF(T/J, s) = 0 for every s >= t: one more than the sum of
/// (b_v - 1) over the pure powers X_v^{b_v} in J. nullopt when J misses a
/// pure power of some variable.
std::optional<int> vanishing_degree(const MonomialIdeal& ideal);

/// Sum over all degrees of HF(T/(X_1^{a_1+1}, ..., X_n^{a_n+1})), i.e.
/// prod(a_i + 1). The closed form is checked against the enumerated sum.
std::uint64_t hf_sum_complete_intersection(const std::vector<int>& exponents);

/// Intersection of monomial ideals, generated by pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

struct ClaimReport {
  std::vector<std::uint64_t> ideal_sums;  // sum_t HF(T/J_i, t)
  std::uint64_t intersection_sum = 0;     // sum_t HF(T/(J_1 cap ... cap J_r), t)
  std::uint64_t lhs = 0;                  // intersection_sum
  std::int64_t rhs = 0;                   // sum(ideal_sums) - r + 1
  int t_max = 0;
  bool tails_zero = false;
  bool holds = false;
};

/// Checks sum HF(T/cap J_i) = sum_i sum HF(T/J_i) - r + 1 by counting
/// standard monomials up to t_max. Each J_i must contain every variable
/// outside its block as a linear generator (its block being the variables
/// that are not), the blocks must be pairwise disjoint and each J_i must
/// contain a power of every block variable. Throws ValidationError
/// otherwise. The default t_max is the largest vanishing degree involved.
ClaimReport verify_claim_identity(const std::vector<MonomialIdeal>& ideals, std::optional<int> t_max = std::nullopt);

/// True iff operator(F) = 0.
bool annihilator_membership(const Polynomial& op, const CoprimeForm& form);
bool annihilator_membership(const Polynomial& op, const Polynomial& form);

}  // namespace waring
