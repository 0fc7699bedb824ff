#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

namespace waring {

/// Canonical variable order: indexed names x0, x1, ... by numeric index, then
/// any other names alphabetically.
bool variable_less(std::string_view a, std::string_view b);

/// A monomial x_{s_1}^{a_1} ... x_{s_n}^{a_n} inside a namespace of
/// num_vars() variables. Only variables with positive exponent are stored.
class Monomial {
 public:
  Monomial() = default;
  /// Zero exponents are dropped; `support` need not be sorted.
  Monomial(std::size_t num_vars, std::vector<std::size_t> support, std::vector<int> exponents);

  /// From a full exponent vector over the namespace; zeros are dropped.
  static Monomial from_exponents(const Exponents& exponents);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return support_.size(); }
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int degree() const;

  Exponents full_exponents() const;

  /// Positions into support(), stably sorted by ascending exponent. The first
  /// entry is the tracked least-exponent variable.
  std::vector<std::size_t> sorted_positions() const;
  std::vector<int> sorted_exponents() const;
  /// Namespace index of the least-exponent variable (first in namespace order
  /// on ties).
  std::size_t least_variable() const;

  Polynomial to_polynomial(const Rational& coefficient = 1) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::size_t> support_;
  std::vector<int> exponents_;
};

std::string render_monomial(const Monomial& m, std::span<const std::string> names);
std::string render_exponents(const Exponents& e, std::span<const std::string> names);

/// c_1 M_1 + ... + c_r M_r with pairwise coprime monomials of one common
/// degree. Construction validates and puts the monomials in canonical order
/// (by their first variable).
class CoprimeForm {
 public:
  CoprimeForm(std::vector<std::string> variables, std::vector<Monomial> monomials,
              std::vector<Rational> coefficients);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  std::size_t num_vars() const { return variables_.size(); }
  std::size_t size() const { return monomials_.size(); }
  int degree() const { return degree_; }

  Polynomial to_polynomial() const;

  friend bool operator==(const CoprimeForm&, const CoprimeForm&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> monomials_;
  std::vector<Rational> coefficients_;
  int degree_ = 0;
};

/// Monomial ideal in dual variables X_0..X_{n-1}. The generator list is
/// kept minimal and sorted.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t num_vars, std::vector<Exponents> generators);

  static MonomialIdeal maximal(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Exponents>& generators() const { return generators_; }

  /// True when x^e is divisible by some generator.
  bool contains(const Exponents& e) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Exponents> generators_;
};

/// Raw result of reading the form grammar, before any coprimality checks.
struct ParsedTerm {
  Rational coefficient;
  Exponents exponents;  // over ParsedExpression::variables
  std::size_t position = 0;
};

struct ParsedExpression {
  std::vector<std::string> variables;  // canonical order
  std::vector<ParsedTerm> terms;

  /// Sum of the terms with like monomials combined.
  Polynomial to_polynomial() const;
};

/// Reads
///   form     := term (('+'|'-') term)*
///   term     := (rational '*')? factor ('*' factor)*
///   factor   := variable ('^' integer)?
///   variable := 'x' integer | letter
/// ignoring whitespace. A leading sign on the first term is accepted.
/// Throws ParseError with the offending position.
ParsedExpression parse_expression(std::string_view text);

/// parse_expression followed by validation into a CoprimeForm over the
/// minimal variable set.
CoprimeForm parse_form(std::string_view text);

/// Text that parse_form reads back to the same form.
std::string render(const CoprimeForm& form);

struct ParsedIdeals {
  std::vector<std::string> variables;
  std::vector<MonomialIdeal> ideals;
};

/// Each text is a comma-separated list of monomials; all ideals share one
/// namespace made of every variable mentioned.
ParsedIdeals parse_ideals(std::span<const std::string> texts);

/// Restricts the namespace to the variables that actually occur.
CoprimeForm drop_unused_variables(const CoprimeForm& form);

/// X_j^{a_j+1} for every variable of M.
MonomialIdeal perp_generators(const Monomial& m);

/// X_{j}^{a_j+1} - X_{1}^{a_j+1} for j = 2..n in the ascending-exponent
/// view, X_1 being the least-exponent variable. Empty when n = 1.
std::vector<Polynomial> ci_point_ideal(const Monomial& m);

}  // namespace waring
