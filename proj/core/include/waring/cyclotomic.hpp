#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Precomputed data for Q(zeta_N): the modulus Phi_N and the reductions of
/// x^k modulo Phi_N. Instances live for the whole program and are shared
/// through cyclotomic_field().
struct CyclotomicField {
  int order = 1;
  int degree = 1;                        // phi(order)
  std::vector<Integer> modulus;          // Phi_N, low to high, monic
  std::vector<std::vector<Integer>> power_reduction;  // x^k mod Phi_N

  const std::vector<Integer>& reduce_power(std::size_t k) const { return power_reduction[k]; }
};

/// Returns the shared field data for Q(zeta_N). Thread-safe.
const CyclotomicField& cyclotomic_field(int order);

/// Phi_N with integer coefficients, low degree first. Computed by exact
/// division of x^N - 1 by Phi_d for each proper divisor d of N.
std::vector<Integer> cyclotomic_polynomial(int order);

int euler_phi(int n);
std::int64_t lcm_order(std::int64_t a, std::int64_t b);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
///
/// Binary operations between elements of different orders lift both sides
/// into Q(zeta_L) with L = lcm of the two orders. Equality follows the same
/// rule, so a rational compares equal to itself whatever field it lives in.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(const Rational& value, int order = 1);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long value) : CyclotomicNumber(Rational(value)) {}  // NOLINT
  CyclotomicNumber(int value) : CyclotomicNumber(Rational(value)) {}   // NOLINT

  /// Builds sum coeffs[k] * z^k, reducing any degree >= phi(N).
  CyclotomicNumber(int order, std::vector<Rational> coeffs);

  /// The generator zeta_N = exp(2 pi i / N).
  static CyclotomicNumber zeta(int order);

  int order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DomainError when the element is not rational.
  Rational rational_value() const;

  /// The same element expressed in Q(zeta_M). M must be a multiple of order().
  CyclotomicNumber lift(int multiple_order) const;

  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(std::int64_t exponent) const;

  /// Complex value for diagnostics and numeric cross-checks.
  std::pair<double, double> to_complex() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
  CyclotomicNumber operator-() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Multiplies by a rational without touching the field.
  CyclotomicNumber scaled(const Rational& factor) const;

 private:
  void bring_to(int order);

  int order_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }

/// zeta_F^{(F/R) * power}: an R-th root of unity expressed in Q(zeta_F).
/// Throws DomainError when root_order does not divide field_order.
CyclotomicNumber cyclotomic_embed(int root_order, std::int64_t power, int field_order);

/// If x == q * zeta_N^k for a rational q, returns k (smallest non-negative).
/// Returns -1 otherwise.
int root_of_unity_exponent(const CyclotomicNumber& x, Rational* scale = nullptr);

/// Power-basis text such as "1/9*z3" or "-1 - z3". Roots of unity times a
/// rational print as "q*zN^k"; rationals print bare.
std::string to_string(const CyclotomicNumber& x);
std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

}  // namespace waring
