#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "waring/cyclotomic.hpp"
#include "waring/error.hpp"

namespace waring {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row echelon form built one row at a time. Each incoming row is reduced
/// against the stored pivots in column order; a row with something left over
/// becomes a new pivot whose column is its first nonzero entry. Works over
/// any exact field type providing is_zero(), inverse via operator/ and the
/// usual ring operators.
template <class T>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces `row` in place against the current pivots. Returns true when the
  /// row was independent and has been stored as a new pivot.
  bool insert(std::vector<T>& row) {
    reduce(row);
    std::size_t lead = 0;
    while (lead < cols_ && is_zero(row[lead])) ++lead;
    if (lead == cols_) return false;
    const T inv = T(1) / row[lead];
    for (std::size_t j = lead; j < row.size(); ++j) {
      if (!is_zero(row[j])) row[j] *= inv;
    }
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    const auto idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, lead);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(idx), row);
    return true;
  }

  void reduce(std::vector<T>& row) const {
    for (std::size_t p = 0; p < pivots_.size(); ++p) {
      const std::size_t col = pivot_cols_[p];
      if (is_zero(row[col])) continue;
      const T factor = row[col];
      const auto& pivot = pivots_[p];
      for (std::size_t j = col; j < row.size(); ++j) {
        if (!is_zero(pivot[j])) row[j] -= factor * pivot[j];
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  const Matrix<T>& pivot_rows() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivot_cols_;
  Matrix<T> pivots_;
};

/// Rank of a matrix over an exact field.
template <class T>
std::size_t exact_rank(const Matrix<T>& matrix) {
  if (matrix.empty()) return 0;
  IncrementalEchelon<T> echelon(matrix.front().size());
  for (auto row : matrix) {
    echelon.insert(row);
    if (echelon.rank() == echelon.cols()) break;
  }
  return echelon.rank();
}

struct LinearSystem {
  Matrix<CyclotomicNumber> matrix;
  std::vector<CyclotomicNumber> rhs;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
};

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnique;
  std::vector<CyclotomicNumber> solution;  // filled only for kUnique
  std::size_t rank = 0;
  std::size_t failing_row = 0;  // first row contradicting the rows before it

  bool ok() const { return status == SolveStatus::kUnique; }
};

/// Exact Gaussian elimination over Q(zeta_N). Throws DomainError when the
/// dimensions disagree.
SolveOutcome solve_exact(const LinearSystem& system);

}  // namespace waring
