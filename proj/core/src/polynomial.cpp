#include "waring/polynomial.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

void enumerate(std::size_t num_vars, int remaining, Exponents& current, std::size_t index,
               std::vector<Exponents>& out) {
  if (index + 1 == num_vars) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[index] = e;
    enumerate(num_vars, remaining - e, current, index + 1, out);
  }
}

Integer falling_factorial(int m, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= m - i;
  return r;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(num_vars, 0);
  enumerate(num_vars, degree, current, 0, out);
  return out;
}

Integer multinomial(const Exponents& exponents) {
  int total = 0;
  Integer denom = 1;
  for (int e : exponents) {
    total += e;
    denom *= factorial(static_cast<unsigned>(e));
  }
  return factorial(static_cast<unsigned>(total)) / denom;
}

Polynomial Polynomial::monomial(Exponents exponents, CyclotomicNumber coefficient) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

CyclotomicNumber Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? CyclotomicNumber() : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const CyclotomicNumber& c) {
  if (exponents.size() != num_vars_) throw DomainError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

bool Polynomial::has_rational_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

CyclotomicNumber Polynomial::evaluate(std::span<const CyclotomicNumber> point) const {
  if (point.size() != num_vars_) throw DomainError("evaluation point has wrong dimension");
  CyclotomicNumber sum;
  for (const auto& [e, c] : terms_) {
    CyclotomicNumber term = c;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (e[j] > 0) term *= point[j].pow(e[j]);
    }
    sum += term;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) {
    throw DomainError("polynomials live in different variable namespaces (" + std::to_string(num_vars_) +
                      " vs " + std::to_string(other.num_vars_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const CyclotomicNumber& factor) const {
  Polynomial out(num_vars_);
  if (factor.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

Polynomial poly_pow_linear(std::span<const CyclotomicNumber> linear_coeffs, int degree) {
  const std::size_t n = linear_coeffs.size();
  Polynomial out(n);
  if (degree < 0) throw DomainError("negative power of a linear form");

  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < n; ++j) {
    if (!linear_coeffs[j].is_zero()) active.push_back(j);
  }
  if (active.empty()) {
    if (degree == 0) out.add_term(Exponents(n, 0), 1);
    return out;
  }

  // powers[a][k] = c_{active[a]}^k
  std::vector<std::vector<CyclotomicNumber>> powers(active.size());
  for (std::size_t a = 0; a < active.size(); ++a) {
    powers[a].reserve(static_cast<std::size_t>(degree) + 1);
    powers[a].emplace_back(1);
    for (int k = 1; k <= degree; ++k) powers[a].push_back(powers[a].back() * linear_coeffs[active[a]]);
  }

  Exponents full(n, 0);
  for (const auto& local : monomials_of_degree(active.size(), degree)) {
    CyclotomicNumber c(Rational(multinomial(local)));
    for (std::size_t a = 0; a < active.size(); ++a) {
      full[active[a]] = local[a];
      if (local[a] > 0) c *= powers[a][static_cast<std::size_t>(local[a])];
    }
    out.add_term(full, c);
  }
  return out;
}

Polynomial apply_differential(const Polynomial& op, const Polynomial& target) {
  if (op.num_vars() != target.num_vars()) {
    throw DomainError("operator and target live in different variable namespaces");
  }
  Polynomial out(target.num_vars());
  Exponents e(target.num_vars());
  for (const auto& [eo, co] : op.terms()) {
    for (const auto& [et, ct] : target.terms()) {
      Integer factor = 1;
      bool vanishes = false;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (eo[j] > et[j]) {
          vanishes = true;
          break;
        }
        e[j] = et[j] - eo[j];
        factor *= falling_factorial(et[j], eo[j]);
      }
      if (vanishes) continue;
      out.add_term(e, (co * ct).scaled(Rational(factor)));
    }
  }
  return out;
}

}  // namespace waring
