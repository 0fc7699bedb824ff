#include "waring/forms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "waring/error.hpp"

namespace waring {

namespace {

std::optional<long> indexed_variable(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  long value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    value = value * 10 + (name[i] - '0');
  }
  return value;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

// Recursive-descent reader shared by the form and ideal entry points. The
// variable table accumulates names in first-appearance order.
class Reader {
 public:
  Reader(std::string_view text, std::vector<std::string>& names) : text_(text), names_(names) {}

  std::vector<ParsedTerm> form() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

  std::vector<std::pair<std::vector<std::pair<std::size_t, int>>, std::size_t>> monomial_list() {
    std::vector<std::pair<std::vector<std::pair<std::size_t, int>>, std::size_t>> out;
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      std::vector<std::pair<std::size_t, int>> factors{factor()};
      while (true) {
        skip_ws();
        if (peek() != '*') break;
        ++pos_;
        factors.push_back(factor());
      }
      out.emplace_back(std::move(factors), start);
      skip_ws();
      if (at_end()) break;
      if (peek() != ',') fail("expected ',' between generators");
      ++pos_;
    }
    return out;
  }

  ParsedTerm term(bool negative) {
    skip_ws();
    ParsedTerm t;
    t.position = pos_;
    t.coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = rational();
      skip_ws();
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    if (negative) t.coefficient = -t.coefficient;
    factors_.clear();
    factors_.push_back(factor());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factors_.push_back(factor());
    }
    t.exponents.assign(names_.size(), 0);
    for (const auto& [var, e] : factors_) {
      if (t.exponents.size() < names_.size()) t.exponents.resize(names_.size(), 0);
      t.exponents[var] += e;
    }
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(pos_, message + ", found " + found);
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    const std::size_t start = pos_;
    Integer num(digits());
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      den = Integer(digits());
      if (den == 0) throw ParseError(start, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::pair<std::size_t, int> factor() {
    skip_ws();
    const char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a variable");
    std::string name(1, c);
    ++pos_;
    if (c == 'x') {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("variables are single letters or x followed by digits");
    }
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const std::size_t start = pos_;
      const std::string e = digits();
      if (e.size() > 6) throw ParseError(start, "exponent too large");
      exponent = std::stoi(e);
    }
    return {lookup(name), exponent};
  }

  std::size_t lookup(const std::string& name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<std::size_t>(it - names_.begin());
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::string_view text_;
  std::vector<std::string>& names_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::size_t, int>> factors_;
};

// Permutation that sorts `names` canonically: order[k] is the old index of the
// k-th canonical name; remap[old] is its new index.
std::vector<std::size_t> canonical_remap(std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return variable_less(names[a], names[b]); });
  std::vector<std::size_t> remap(names.size());
  std::vector<std::string> sorted;
  sorted.reserve(names.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    sorted.push_back(names[order[k]]);
  }
  names = std::move(sorted);
  return remap;
}

Exponents apply_remap(const Exponents& e, const std::vector<std::size_t>& remap) {
  Exponents out(remap.size(), 0);
  for (std::size_t j = 0; j < e.size(); ++j) out[remap[j]] = e[j];
  return out;
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  const auto ia = indexed_variable(a);
  const auto ib = indexed_variable(b);
  if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
  if (ia || ib) return ia.has_value();
  return a < b;
}

Monomial::Monomial(std::size_t num_vars, std::vector<std::size_t> support, std::vector<int> exponents)
    : num_vars_(num_vars) {
  if (support.size() != exponents.size()) throw DomainError("monomial support/exponent length mismatch");
  std::vector<std::pair<std::size_t, int>> pairs;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (exponents[k] < 0) throw DomainError("negative exponent in monomial");
    if (support[k] >= num_vars) throw DomainError("monomial variable outside namespace");
    if (exponents[k] > 0) pairs.emplace_back(support[k], exponents[k]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].first == pairs[k - 1].first) throw DomainError("repeated variable in monomial");
  }
  for (const auto& [v, e] : pairs) {
    support_.push_back(v);
    exponents_.push_back(e);
  }
}

Monomial Monomial::from_exponents(const Exponents& exponents) {
  std::vector<std::size_t> support(exponents.size());
  std::iota(support.begin(), support.end(), 0);
  return Monomial(exponents.size(), std::move(support), exponents);
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

Exponents Monomial::full_exponents() const {
  Exponents out(num_vars_, 0);
  for (std::size_t k = 0; k < support_.size(); ++k) out[support_[k]] = exponents_[k];
  return out;
}

std::vector<std::size_t> Monomial::sorted_positions() const {
  std::vector<std::size_t> pos(support_.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(),
                   [&](std::size_t a, std::size_t b) { return exponents_[a] < exponents_[b]; });
  return pos;
}

std::vector<int> Monomial::sorted_exponents() const {
  std::vector<int> out = exponents_;
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Monomial::least_variable() const {
  if (support_.empty()) throw DomainError("constant monomial has no least variable");
  return support_[sorted_positions().front()];
}

Polynomial Monomial::to_polynomial(const Rational& coefficient) const {
  return Polynomial::monomial(full_exponents(), coefficient);
}

std::string render_exponents(const Exponents& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += j < names.size() ? names[j] : "x" + std::to_string(j);
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

std::string render_monomial(const Monomial& m, std::span<const std::string> names) {
  return render_exponents(m.full_exponents(), names);
}

CoprimeForm::CoprimeForm(std::vector<std::string> variables, std::vector<Monomial> monomials,
                         std::vector<Rational> coefficients)
    : variables_(std::move(variables)), coefficients_(std::move(coefficients)) {
  if (monomials.empty()) throw ValidationError("a form needs at least one monomial");
  if (monomials.size() != coefficients_.size()) throw DomainError("monomial/coefficient count mismatch");

  std::vector<std::size_t> order(monomials.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& m : monomials) {
    if (m.num_vars() != variables_.size()) throw DomainError("monomial namespace differs from the form's");
    if (m.size() == 0) throw ValidationError("constant terms are not forms of positive degree");
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (is_zero(coefficients_[i])) {
      throw ValidationError("zero coefficient on monomial " + render_monomial(monomials[i], variables_));
    }
  }

  degree_ = monomials.front().degree();
  for (const auto& m : monomials) {
    if (m.degree() != degree_) {
      throw ValidationError("mixed degrees: " + std::to_string(degree_) + " vs " + std::to_string(m.degree()) +
                            " (" + render_monomial(monomials.front(), variables_) + " and " +
                            render_monomial(m, variables_) + ")");
    }
  }

  std::vector<std::optional<std::size_t>> owner(variables_.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t v : monomials[i].support()) {
      if (owner[v]) {
        throw ValidationError("monomials " + render_monomial(monomials[*owner[v]], variables_) + " and " +
                              render_monomial(monomials[i], variables_) + " are not coprime: both contain " +
                              variables_[v]);
      }
      owner[v] = i;
    }
  }

  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monomials[a].support().front() < monomials[b].support().front();
  });
  std::vector<Rational> coeffs;
  for (std::size_t i : order) {
    monomials_.push_back(monomials[i]);
    coeffs.push_back(coefficients_[i]);
  }
  coefficients_ = std::move(coeffs);
}

Polynomial CoprimeForm::to_polynomial() const {
  Polynomial p(variables_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    p.add_term(monomials_[i].full_exponents(), coefficients_[i]);
  }
  return p;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Exponents> generators) : num_vars_(num_vars) {
  for (const auto& g : generators) {
    if (g.size() != num_vars) throw DomainError("ideal generator has wrong number of variables");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && divides(generators[j], generators[i]);
    }
    if (!redundant) generators_.push_back(generators[i]);
  }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t num_vars) {
  std::vector<Exponents> gens;
  for (std::size_t j = 0; j < num_vars; ++j) {
    Exponents e(num_vars, 0);
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(num_vars, std::move(gens));
}

bool MonomialIdeal::contains(const Exponents& e) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponents& g) { return divides(g, e); });
}

Polynomial ParsedExpression::to_polynomial() const {
  Polynomial p(variables.size());
  for (const auto& t : terms) p.add_term(t.exponents, t.coefficient);
  return p;
}

ParsedExpression parse_expression(std::string_view text) {
  ParsedExpression out;
  Reader reader(text, out.variables);
  out.terms = reader.form();
  for (auto& t : out.terms) t.exponents.resize(out.variables.size(), 0);
  const auto remap = canonical_remap(out.variables);
  for (auto& t : out.terms) t.exponents = apply_remap(t.exponents, remap);
  return out;
}

CoprimeForm parse_form(std::string_view text) {
  const ParsedExpression parsed = parse_expression(text);
  std::vector<Monomial> monomials;
  std::vector<Rational> coefficients;
  for (const auto& t : parsed.terms) {
    if (is_zero(t.coefficient)) {
      throw ValidationError("zero coefficient in term at position " + std::to_string(t.position));
    }
    Monomial m = Monomial::from_exponents(t.exponents);
    if (m.size() == 0) throw ValidationError("constant term at position " + std::to_string(t.position));
    monomials.push_back(std::move(m));
    coefficients.push_back(t.coefficient);
  }
  return drop_unused_variables(CoprimeForm(parsed.variables, std::move(monomials), std::move(coefficients)));
}

std::string render(const CoprimeForm& form) {
  std::ostringstream os;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const Rational& c = form.coefficients()[i];
    const Rational mag = abs(c);
    if (i == 0) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << render_monomial(form.monomials()[i], form.variables());
  }
  return os.str();
}

ParsedIdeals parse_ideals(std::span<const std::string> texts) {
  ParsedIdeals out;
  std::vector<std::vector<Exponents>> raw;
  for (const auto& text : texts) {
    Reader reader(text, out.variables);
    std::vector<Exponents> gens;
    for (const auto& [factors, position] : reader.monomial_list()) {
      Exponents e(out.variables.size(), 0);
      for (const auto& [v, k] : factors) e[v] += k;
      gens.push_back(std::move(e));
    }
    raw.push_back(std::move(gens));
  }
  const auto remap = canonical_remap(out.variables);
  for (auto& gens : raw) {
    for (auto& g : gens) {
      g.resize(remap.size(), 0);
      g = apply_remap(g, remap);
    }
    out.ideals.emplace_back(remap.size(), std::move(gens));
  }
  return out;
}

CoprimeForm drop_unused_variables(const CoprimeForm& form) {
  std::vector<bool> used(form.num_vars(), false);
  for (const auto& m : form.monomials()) {
    for (std::size_t v : m.support()) used[v] = true;
  }
  std::vector<std::size_t> remap(form.num_vars(), 0);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < form.num_vars(); ++v) {
    if (!used[v]) continue;
    remap[v] = names.size();
    names.push_back(form.variables()[v]);
  }
  if (names.size() == form.num_vars()) return form;
  std::vector<Monomial> monomials;
  for (const auto& m : form.monomials()) {
    std::vector<std::size_t> support;
    for (std::size_t v : m.support()) support.push_back(remap[v]);
    monomials.emplace_back(names.size(), std::move(support), m.exponents());
  }
  return CoprimeForm(std::move(names), std::move(monomials), form.coefficients());
}

MonomialIdeal perp_generators(const Monomial& m) {
  std::vector<Exponents> gens;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Exponents e(m.num_vars(), 0);
    e[m.support()[k]] = m.exponents()[k] + 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(m.num_vars(), std::move(gens));
}

std::vector<Polynomial> ci_point_ideal(const Monomial& m) {
  std::vector<Polynomial> out;
  const auto pos = m.sorted_positions();
  if (pos.size() < 2) return out;
  const std::size_t least = m.support()[pos.front()];
  for (std::size_t k = 1; k < pos.size(); ++k) {
    const int power = m.exponents()[pos[k]] + 1;
    Exponents lead(m.num_vars(), 0);
    Exponents trail(m.num_vars(), 0);
    lead[m.support()[pos[k]]] = power;
    trail[least] = power;
    Polynomial b = Polynomial::monomial(lead);
    b.add_term(trail, -1);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace waring
