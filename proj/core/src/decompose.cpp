#include "waring/decompose.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "waring/error.hpp"
#include "waring/linear_system.hpp"

namespace waring {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

}  // namespace

Polynomial PowerSumDecomposition::expand() const {
  Polynomial sum(variables.size());
  for (const auto& term : terms) {
    if (term.linear.size() != variables.size()) {
      throw ValidationError("linear form has " + std::to_string(term.linear.size()) + " coefficients for " +
                            std::to_string(variables.size()) + " variables");
    }
    sum += poly_pow_linear(term.linear, degree).scaled(term.gamma);
  }
  return sum;
}

int field_order_for(const Monomial& m) {
  const auto sorted = m.sorted_exponents();
  std::int64_t order = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) order = lcm_order(order, sorted[i] + 1);
  if (order > std::numeric_limits<int>::max()) throw ResourceError("cyclotomic field order overflows");
  return static_cast<int>(order);
}

std::vector<std::vector<int>> decomposition_root_exponents(const Monomial& m) {
  const auto pos = m.sorted_positions();
  std::vector<std::vector<int>> out;
  std::vector<int> current(pos.size(), 0);
  while (true) {
    out.push_back(current);
    // Odometer over positions 1..n-1, last one fastest.
    std::size_t k = pos.size();
    while (true) {
      if (k <= 1) return out;
      --k;
      if (++current[k] <= m.exponents()[pos[k]]) break;
      current[k] = 0;
    }
  }
}

std::vector<std::vector<CyclotomicNumber>> decomposition_points(const Monomial& m) {
  const auto pos = m.sorted_positions();
  const int order = field_order_for(m);
  std::vector<std::vector<CyclotomicNumber>> out;
  for (const auto& roots : decomposition_root_exponents(m)) {
    std::vector<CyclotomicNumber> point(pos.size());
    point[pos[0]] = CyclotomicNumber(1, order);
    for (std::size_t k = 1; k < pos.size(); ++k) {
      point[pos[k]] = cyclotomic_embed(m.exponents()[pos[k]] + 1, roots[k], order);
    }
    out.push_back(std::move(point));
  }
  return out;
}

PowerSumDecomposition solve_gammas(const Monomial& m, const Rational& coefficient,
                                   std::span<const std::string> variables) {
  if (m.size() == 0) throw DomainError("cannot decompose a constant");
  const std::size_t n = m.size();
  const int d = m.degree();
  const auto points = decomposition_points(m);

  // Columns: expansions of the local linear forms; rows: degree-d monomials
  // in the variables of m.
  const auto rows = monomials_of_degree(n, d);
  std::map<Exponents, std::size_t, std::greater<>> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  LinearSystem system;
  system.matrix.assign(rows.size(), std::vector<CyclotomicNumber>(points.size()));
  system.rhs.assign(rows.size(), CyclotomicNumber());
  for (std::size_t col = 0; col < points.size(); ++col) {
    const Polynomial power = poly_pow_linear(points[col], d);
    for (const auto& [e, c] : power.terms()) system.matrix[row_index.at(e)][col] = c;
  }
  system.rhs[row_index.at(m.exponents())] = CyclotomicNumber(coefficient);

  const SolveOutcome outcome = solve_exact(system);
  if (!outcome.ok()) {
    throw InternalError(std::string("apolar point system for ") + render_monomial(m, default_names(m.num_vars())) +
                        (outcome.status == SolveStatus::kInconsistent
                             ? " is inconsistent at row " + std::to_string(outcome.failing_row)
                             : " has rank " + std::to_string(outcome.rank) + " < " + std::to_string(points.size())));
  }

  PowerSumDecomposition out;
  out.degree = d;
  out.variables = variables.empty() ? default_names(m.num_vars())
                                    : std::vector<std::string>(variables.begin(), variables.end());
  if (out.variables.size() != m.num_vars()) throw DomainError("variable names do not match the namespace");
  for (std::size_t col = 0; col < points.size(); ++col) {
    DecompositionTerm term;
    term.gamma = outcome.solution[col];
    term.linear.assign(m.num_vars(), CyclotomicNumber());
    for (std::size_t k = 0; k < n; ++k) term.linear[m.support()[k]] = points[col][k];
    term.point = points[col];
    out.terms.push_back(std::move(term));
  }
  return out;
}

PowerSumDecomposition decompose_form(const CoprimeForm& form) {
  PowerSumDecomposition out;
  out.degree = form.degree();
  out.variables = form.variables();
  if (form.degree() == 1) {
    DecompositionTerm term;
    term.gamma = 1;
    term.linear.assign(form.num_vars(), CyclotomicNumber());
    for (std::size_t i = 0; i < form.size(); ++i) {
      term.linear[form.monomials()[i].support().front()] = form.coefficients()[i];
    }
    term.point = term.linear;
    out.terms.push_back(std::move(term));
    return out;
  }
  for (std::size_t i = 0; i < form.size(); ++i) {
    auto block = solve_gammas(form.monomials()[i], form.coefficients()[i], form.variables());
    for (auto& term : block.terms) {
      term.block = i;
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

bool linearly_dependent(std::span<const CyclotomicNumber> a, std::span<const CyclotomicNumber> b) {
  if (a.size() != b.size()) return false;
  std::size_t lead = 0;
  while (lead < a.size() && a[lead].is_zero()) ++lead;
  if (lead == a.size()) return true;
  const CyclotomicNumber ratio = b[lead] / a[lead];
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(b[j] == ratio * a[j])) return false;
  }
  return true;
}

VerificationReport verify_decomposition(const CoprimeForm& form, const PowerSumDecomposition& decomposition) {
  VerificationReport report;
  report.degree_matches = decomposition.degree == form.degree();
  report.term_count = decomposition.size();
  report.expected_rank = rank_coprime_sum(form);
  report.count_matches = report.term_count == report.expected_rank;

  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < decomposition.variables.size(); ++j) index.emplace(decomposition.variables[j], j);

  bool well_formed = true;
  for (const auto& name : form.variables()) {
    if (!index.contains(name)) {
      well_formed = false;
      report.first_mismatch = "variable " + name + " missing from the decomposition";
      report.mismatch_count = 1;
      break;
    }
  }
  for (std::size_t t = 0; t < decomposition.size() && well_formed; ++t) {
    if (decomposition.terms[t].linear.size() != decomposition.variables.size()) {
      well_formed = false;
      report.first_mismatch = "term " + std::to_string(t) + " has a linear form of the wrong length";
      report.mismatch_count = 1;
    }
  }

  if (well_formed && report.degree_matches) {
    Polynomial expected(decomposition.variables.size());
    for (std::size_t i = 0; i < form.size(); ++i) {
      Exponents e(decomposition.variables.size(), 0);
      const auto& m = form.monomials()[i];
      for (std::size_t k = 0; k < m.size(); ++k) e[index.at(form.variables()[m.support()[k]])] = m.exponents()[k];
      expected.add_term(e, form.coefficients()[i]);
    }
    const Polynomial got = decomposition.expand();
    const Polynomial diff = got - expected;
    report.mismatch_count = diff.size();
    report.expansion_exact = diff.is_zero();
    if (!diff.is_zero()) {
      const auto& e = diff.terms().begin()->first;
      report.first_mismatch = render_exponents(e, decomposition.variables) + ": expected " +
                              to_string(expected.coefficient(e)) + ", got " + to_string(got.coefficient(e));
    }
  } else if (!report.degree_matches && report.first_mismatch.empty()) {
    report.first_mismatch = "degree " + std::to_string(decomposition.degree) + " differs from the form's " +
                            std::to_string(form.degree());
  }

  report.blocks_independent = true;
  for (std::size_t a = 0; a < decomposition.size(); ++a) {
    for (std::size_t b = a + 1; b < decomposition.size(); ++b) {
      const auto& ta = decomposition.terms[a];
      const auto& tb = decomposition.terms[b];
      if (ta.block != tb.block) continue;
      if (linearly_dependent(ta.linear, tb.linear)) {
        report.blocks_independent = false;
        report.dependent_pairs.emplace_back(a, b);
      }
    }
  }
  return report;
}

bool LeastVariableReport::passed() const {
  return std::all_of(term_passes.begin(), term_passes.end(), [](bool b) { return b; });
}

LeastVariableReport least_variable_check(const CoprimeForm& form, const PowerSumDecomposition& decomposition) {
  LeastVariableReport report;
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < decomposition.variables.size(); ++j) index.emplace(decomposition.variables[j], j);

  auto involves = [&](const DecompositionTerm& term, std::size_t block, std::string& why) {
    const std::string& name = form.variables()[form.monomials()[block].least_variable()];
    auto it = index.find(name);
    if (it == index.end() || it->second >= term.linear.size() || term.linear[it->second].is_zero()) {
      why = "does not involve " + name;
      return false;
    }
    return true;
  };

  for (std::size_t t = 0; t < decomposition.size(); ++t) {
    const auto& term = decomposition.terms[t];
    std::string why;
    bool ok = true;
    if (form.degree() == 1) {
      for (std::size_t b = 0; b < form.size() && ok; ++b) ok = involves(term, b, why);
    } else if (term.block >= form.size()) {
      ok = false;
      why = "refers to block " + std::to_string(term.block) + " of a form with " + std::to_string(form.size());
    } else {
      ok = involves(term, term.block, why);
    }
    report.term_passes.push_back(ok);
    if (!ok) report.failures.push_back("term " + std::to_string(t) + " " + why);
  }
  return report;
}

}  // namespace waring
