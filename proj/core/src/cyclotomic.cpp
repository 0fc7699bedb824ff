#include "waring/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "waring/error.hpp"

namespace waring {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
IntPoly divide_exact_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw InternalError("cyclotomic division degree underflow");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw InternalError("inexact cyclotomic division");
  }
  return quot;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::unique_ptr<CyclotomicField> build_field(int order) {
  auto field = std::make_unique<CyclotomicField>();
  field->order = order;
  field->modulus = cyclotomic_polynomial(order);
  field->degree = static_cast<int>(field->modulus.size()) - 1;
  const std::size_t phi = static_cast<std::size_t>(field->degree);
  const std::size_t count = std::max<std::size_t>({static_cast<std::size_t>(order), 2 * phi, 1});

  field->power_reduction.reserve(count);
  IntPoly current(phi, 0);
  current[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    field->power_reduction.push_back(current);
    // current <- x * current mod Phi
    const Integer top = current[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) current[j] = current[j - 1];
    current[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < phi; ++j) current[j] -= top * field->modulus[j];
    }
  }
  return field;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  const Rational& lead = den.back();
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    const Rational c = num.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  std::map<int, IntPoly> phis;
  for (int d : divisors(order)) {
    IntPoly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (const auto& [e, phi_e] : phis) {
      if (d % e == 0) p = divide_exact_monic(std::move(p), phi_e);
    }
    trim(p);
    phis.emplace(d, std::move(p));
  }
  return phis.at(order);
}

const CyclotomicField& cyclotomic_field(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find(order); it != registry.end()) return *it->second;
  }
  auto built = build_field(order);
  std::lock_guard lock(mutex);
  auto [it, inserted] = registry.try_emplace(order, std::move(built));
  return *it->second;
}

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1, 0) {}

CyclotomicNumber::CyclotomicNumber(const Rational& value, int order) : order_(order) {
  const auto& field = cyclotomic_field(order);
  coeffs_.assign(static_cast<std::size_t>(field.degree), 0);
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> coeffs) : order_(order) {
  const auto& field = cyclotomic_field(order);
  const auto phi = static_cast<std::size_t>(field.degree);
  coeffs_.assign(phi, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (waring::is_zero(coeffs[k])) continue;
    if (k < phi) {
      coeffs_[k] += coeffs[k];
      continue;
    }
    const auto& red = field.reduce_power(k % static_cast<std::size_t>(order));
    for (std::size_t j = 0; j < phi; ++j) {
      if (red[j] != 0) coeffs_[j] += coeffs[k] * red[j];
    }
  }
}

CyclotomicNumber CyclotomicNumber::zeta(int order) {
  if (order <= 2) return CyclotomicNumber(order == 1 ? 1 : -1, order);
  return CyclotomicNumber(order, std::vector<Rational>{0, 1});
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!waring::is_zero(c)) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!waring::is_zero(coeffs_[k])) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number " + to_string(*this) + " is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift(int multiple_order) const {
  if (multiple_order == order_) return *this;
  if (multiple_order % order_ != 0) {
    throw DomainError("cannot lift Q(z" + std::to_string(order_) + ") into Q(z" +
                      std::to_string(multiple_order) + ")");
  }
  if (is_rational()) return CyclotomicNumber(coeffs_[0], multiple_order);
  const auto& target = cyclotomic_field(multiple_order);
  const auto phi = static_cast<std::size_t>(target.degree);
  const auto step = static_cast<std::size_t>(multiple_order / order_);
  CyclotomicNumber out(Rational(0), multiple_order);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (waring::is_zero(coeffs_[k])) continue;
    const auto& red = target.reduce_power(k * step);
    for (std::size_t j = 0; j < phi; ++j) {
      if (red[j] != 0) out.coeffs_[j] += coeffs_[k] * red[j];
    }
  }
  return out;
}

void CyclotomicNumber::bring_to(int order) {
  if (order != order_) *this = lift(order);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_) {
    if (rhs.is_rational()) {
      coeffs_[0] += rhs.coeffs_[0];
      return *this;
    }
    bring_to(static_cast<int>(lcm_order(order_, rhs.order_)));
    if (rhs.order_ != order_) return *this += rhs.lift(order_);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& factor) const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) {
    if (!waring::is_zero(c)) c *= factor;
  }
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (rhs.is_rational()) {
    const Rational factor = rhs.coeffs_[0];
    for (auto& c : coeffs_) {
      if (!waring::is_zero(c)) c *= factor;
    }
    return *this;
  }
  if (is_rational()) {
    *this = rhs.scaled(coeffs_[0]);
    return *this;
  }
  if (rhs.order_ != order_) {
    bring_to(static_cast<int>(lcm_order(order_, rhs.order_)));
    if (rhs.order_ != order_) return *this *= rhs.lift(order_);
  }
  const auto& field = cyclotomic_field(order_);
  const auto phi = static_cast<std::size_t>(field.degree);
  std::vector<Rational> product(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (waring::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (!waring::is_zero(rhs.coeffs_[j])) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  for (std::size_t k = 0; k < phi; ++k) coeffs_[k] = product[k];
  for (std::size_t k = phi; k < product.size(); ++k) {
    if (waring::is_zero(product[k])) continue;
    const auto& red = field.reduce_power(k);
    for (std::size_t j = 0; j < phi; ++j) {
      if (red[j] != 0) coeffs_[j] += product[k] * red[j];
    }
  }
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(z" + std::to_string(order_) + ")");
  if (is_rational()) return CyclotomicNumber(1 / coeffs_[0], order_);

  const auto& field = cyclotomic_field(order_);
  RatPoly r0(field.modulus.begin(), field.modulus.end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly next = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r0.size() != 1) throw InternalError("cyclotomic modulus is not irreducible");
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return CyclotomicNumber(order_, std::move(s0));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

CyclotomicNumber CyclotomicNumber::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CyclotomicNumber result(Rational(1), order_);
  CyclotomicNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<double, double> CyclotomicNumber::to_complex() const {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (waring::is_zero(coeffs_[k])) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    const double c = coeffs_[k].get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const bool ra = a.is_rational();
  const bool rb = b.is_rational();
  if (ra && rb) return a.coeffs_[0] == b.coeffs_[0];
  const int common = static_cast<int>(lcm_order(a.order_, b.order_));
  return a.lift(common).coeffs_ == b.lift(common).coeffs_;
}

CyclotomicNumber cyclotomic_embed(int root_order, std::int64_t power, int field_order) {
  if (root_order < 1 || field_order < 1 || field_order % root_order != 0) {
    throw DomainError("root order " + std::to_string(root_order) + " does not divide field order " +
                      std::to_string(field_order));
  }
  std::int64_t k = (power % root_order + root_order) % root_order;
  k *= field_order / root_order;
  if (field_order <= 2) return CyclotomicNumber(k == 0 ? 1 : -1, field_order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs.back() = 1;
  return CyclotomicNumber(field_order, std::move(coeffs));
}

int root_of_unity_exponent(const CyclotomicNumber& x, Rational* scale) {
  if (x.is_zero()) return -1;
  const int n = x.order();
  const CyclotomicNumber inv_zeta = CyclotomicNumber::zeta(n).inverse();
  CyclotomicNumber y = x;
  for (int k = 0; k < n; ++k) {
    if (y.is_rational()) {
      if (scale != nullptr) *scale = y.rational_value();
      return k;
    }
    y *= inv_zeta;
  }
  return -1;
}

std::string to_string(const CyclotomicNumber& x) {
  if (x.is_rational()) return to_string(x.coefficients()[0]);
  const std::string z = "z" + std::to_string(x.order());
  Rational scale;
  const int k = root_of_unity_exponent(x, &scale);
  if (k > 0) {
    const std::string root = k == 1 ? z : z + "^" + std::to_string(k);
    if (scale == 1) return root;
    if (scale == -1) return "-" + root;
    return to_string(scale) + "*" + root;
  }
  std::ostringstream os;
  bool first = true;
  const auto coeffs = x.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (is_zero(c)) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << z;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << to_string(x); }

}  // namespace waring
