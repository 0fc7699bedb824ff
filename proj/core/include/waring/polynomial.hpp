#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "waring/cyclotomic.hpp"

namespace waring {

using Exponents = std::vector<int>;

/// All exponent vectors of total degree `degree` in `num_vars` variables, in
/// descending lexicographic order (x0^d first).
std::vector<Exponents> monomials_of_degree(std::size_t num_vars, int degree);

/// d! / prod(e_i!) for a degree-d exponent vector.
Integer multinomial(const Exponents& exponents);

/// Sparse multivariate polynomial with cyclotomic coefficients. Terms are
/// keyed by exponent vectors of length num_vars(); zero coefficients are
/// never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, CyclotomicNumber, std::greater<>>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial monomial(Exponents exponents, CyclotomicNumber coefficient = 1);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given exponent vector (zero when absent).
  CyclotomicNumber coefficient(const Exponents& exponents) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const CyclotomicNumber& c);

  /// Common total degree, or nullopt when the polynomial is zero or not
  /// homogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  bool has_rational_coefficients() const;

  CyclotomicNumber evaluate(std::span<const CyclotomicNumber> point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const CyclotomicNumber& factor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// (sum_j c_j x_j)^d by the multinomial theorem, expanding only over the
/// variables whose coefficient is nonzero. All-zero input gives the zero
/// polynomial.
Polynomial poly_pow_linear(std::span<const CyclotomicNumber> linear_coeffs, int degree);

/// Applies `op`, read in the dual variables X_j = d/dx_j, to `target`.
/// X_j^k x_j^m = m!/(m-k)! x_j^{m-k}, zero for k > m. Bilinear.
Polynomial apply_differential(const Polynomial& op, const Polynomial& target);

}  // namespace waring
