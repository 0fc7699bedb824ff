#include "waring/rational.hpp"

#include <cctype>

#include "waring/error.hpp"

namespace waring {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Integer num;
  Integer den = 1;
  const auto slash = text.find('/');
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den);
  if (!ok) throw ValidationError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ResourceError("rank value exceeds 64-bit range");
  }
  return out;
}

}  // namespace waring
