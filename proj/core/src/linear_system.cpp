#include "waring/linear_system.hpp"

namespace waring {

SolveOutcome solve_exact(const LinearSystem& system) {
  const std::size_t rows = system.rows();
  const std::size_t cols = system.cols();
  if (system.rhs.size() != rows) throw DomainError("right-hand side length does not match row count");
  for (const auto& row : system.matrix) {
    if (row.size() != cols) throw DomainError("ragged coefficient matrix");
  }

  SolveOutcome outcome;
  // Columns [0, cols) are the coefficients, column `cols` is the rhs.
  IncrementalEchelon<CyclotomicNumber> echelon(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<CyclotomicNumber> row = system.matrix[i];
    row.push_back(system.rhs[i]);
    if (echelon.insert(row)) continue;
    if (!row[cols].is_zero()) {
      outcome.status = SolveStatus::kInconsistent;
      outcome.failing_row = i;
      outcome.rank = echelon.rank();
      return outcome;
    }
  }
  outcome.rank = echelon.rank();
  if (outcome.rank < cols) {
    outcome.status = SolveStatus::kUnderdetermined;
    return outcome;
  }

  // Full column rank: pivot p sits in column p. Back substitution.
  const auto& pivots = echelon.pivot_rows();
  outcome.solution.assign(cols, CyclotomicNumber());
  for (std::size_t p = cols; p-- > 0;) {
    CyclotomicNumber value = pivots[p][cols];
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (!pivots[p][j].is_zero()) value -= pivots[p][j] * outcome.solution[j];
    }
    outcome.solution[p] = value;
  }
  return outcome;
}

}  // namespace waring
