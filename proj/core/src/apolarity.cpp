#include "waring/apolarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "waring/error.hpp"

namespace waring {

namespace {

Integer falling_factorial(int m, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= m - i;
  return r;
}

// Smallest b with X_v^b in the ideal, or 0 when there is none.
std::vector<int> pure_powers(const MonomialIdeal& ideal) {
  std::vector<int> out(ideal.num_vars(), 0);
  for (const auto& g : ideal.generators()) {
    std::size_t nonzero = 0;
    std::size_t var = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] > 0) {
        ++nonzero;
        var = j;
      }
    }
    if (nonzero != 1) continue;
    if (out[var] == 0 || g[var] < out[var]) out[var] = g[var];
  }
  return out;
}

void count_standard(const MonomialIdeal& ideal, const std::vector<int>& caps, std::size_t index, int remaining,
                    Exponents& current, std::uint64_t& count) {
  const std::size_t n = current.size();
  if (index + 1 == n) {
    if (remaining > caps[index]) return;
    current[index] = remaining;
    if (!ideal.contains(current)) ++count;
    current[index] = 0;
    return;
  }
  const int top = std::min(remaining, caps[index]);
  for (int e = 0; e <= top; ++e) {
    current[index] = e;
    count_standard(ideal, caps, index + 1, remaining - e, current, count);
  }
  current[index] = 0;
}

}  // namespace

CatalecticantMatrix catalecticant(const Polynomial& form, int t) {
  const auto degree = form.homogeneous_degree();
  if (!degree) throw ValidationError("catalecticant needs a nonzero homogeneous form");
  if (!form.has_rational_coefficients()) throw DomainError("catalecticant needs rational coefficients");
  if (t < 0 || t > *degree) {
    throw DomainError("catalecticant degree " + std::to_string(t) + " outside [0, " + std::to_string(*degree) + "]");
  }
  const std::size_t n = form.num_vars();
  CatalecticantMatrix out;
  out.t = t;
  out.rows = monomials_of_degree(n, *degree - t);
  out.cols = monomials_of_degree(n, t);
  std::map<Exponents, std::size_t> row_index;
  for (std::size_t i = 0; i < out.rows.size(); ++i) row_index.emplace(out.rows[i], i);

  out.entries.assign(out.rows.size(), std::vector<Rational>(out.cols.size(), 0));
  Exponents e(n);
  for (std::size_t col = 0; col < out.cols.size(); ++col) {
    const Exponents& op = out.cols[col];
    for (const auto& [term, coeff] : form.terms()) {
      Integer factor = 1;
      bool vanishes = false;
      for (std::size_t j = 0; j < n && !vanishes; ++j) {
        vanishes = op[j] > term[j];
        if (vanishes) break;
        e[j] = term[j] - op[j];
        factor *= falling_factorial(term[j], op[j]);
      }
      if (vanishes) continue;
      out.entries[row_index.at(e)][col] += coeff.rational_value() * factor;
    }
  }
  return out;
}

std::size_t catalecticant_lower_bound(const Polynomial& form, std::optional<int> t_max) {
  const auto degree = form.homogeneous_degree();
  if (!degree) throw ValidationError("lower bound needs a nonzero homogeneous form");
  const int top = t_max.value_or(*degree);
  if (top < 1 || top > *degree) {
    throw DomainError("t_max must lie in [1, " + std::to_string(*degree) + "], got " + std::to_string(top));
  }
  std::size_t best = 0;
  for (int t = 1; t <= top; ++t) best = std::max(best, catalecticant(form, t).rank());
  return best;
}

std::size_t catalecticant_lower_bound(const CoprimeForm& form, std::optional<int> t_max) {
  return catalecticant_lower_bound(form.to_polynomial(), t_max);
}

std::uint64_t hf_monomial_quotient(const MonomialIdeal& ideal, int t) {
  if (t < 0) return 0;
  const std::size_t n = ideal.num_vars();
  if (n == 0) return t == 0 && !ideal.contains({}) ? 1 : 0;
  std::vector<int> caps = pure_powers(ideal);
  for (int& c : caps) c = c == 0 ? t : c - 1;
  Exponents current(n, 0);
  std::uint64_t count = 0;
  count_standard(ideal, caps, 0, t, current, count);
  return count;
}

HilbertFunctionTable hilbert_function_table(const MonomialIdeal& ideal, int t_max) {
  HilbertFunctionTable table;
  std::uint64_t running = 0;
  for (int t = 0; t <= t_max; ++t) {
    const auto v = hf_monomial_quotient(ideal, t);
    running += v;
    table.values.push_back(v);
    table.partial_sums.push_back(running);
  }
  return table;
}

std::optional<int> vanishing_degree(const MonomialIdeal& ideal) {
  int top = 0;
  for (int b : pure_powers(ideal)) {
    if (b == 0) return std::nullopt;
    top += b - 1;
  }
  return top + 1;
}

std::uint64_t hf_sum_complete_intersection(const std::vector<int>& exponents) {
  std::uint64_t closed = 1;
  std::vector<Exponents> gens;
  int top = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 1) throw DomainError("complete intersection exponents must be positive");
    closed = checked_mul(closed, static_cast<std::uint64_t>(exponents[j]) + 1);
    Exponents g(exponents.size(), 0);
    g[j] = exponents[j] + 1;
    gens.push_back(std::move(g));
    top += exponents[j];
  }
  const MonomialIdeal ideal(exponents.size(), std::move(gens));
  const auto table = hilbert_function_table(ideal, top + 1);
  if (table.values.back() != 0 || table.total() != closed) {
    throw InternalError("complete intersection Hilbert sum " + std::to_string(table.total()) +
                        " disagrees with product " + std::to_string(closed));
  }
  return closed;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw DomainError("intersecting ideals in different rings");
  std::vector<Exponents> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      Exponents l(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) l[j] = std::max(g[j], h[j]);
      gens.push_back(std::move(l));
    }
  }
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

ClaimReport verify_claim_identity(const std::vector<MonomialIdeal>& ideals, std::optional<int> t_max) {
  if (ideals.empty()) throw ValidationError("claim identity needs at least one ideal");
  const std::size_t n = ideals.front().num_vars();
  std::vector<int> block_owner(n, -1);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& J = ideals[i];
    if (J.num_vars() != n) throw ValidationError("ideals live in rings of different dimension");
    const auto powers = pure_powers(J);
    for (std::size_t v = 0; v < n; ++v) {
      if (powers[v] == 1) continue;  // linear generator: outside the block
      if (powers[v] == 0) {
        throw ValidationError("ideal " + std::to_string(i + 1) + " contains no power of variable " +
                              std::to_string(v + 1));
      }
      if (block_owner[v] >= 0) {
        throw ValidationError("variable " + std::to_string(v + 1) + " lies in the blocks of ideals " +
                              std::to_string(block_owner[v] + 1) + " and " + std::to_string(i + 1) +
                              "; their sum is not the maximal ideal");
      }
      block_owner[v] = static_cast<int>(i);
    }
  }

  MonomialIdeal meet = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) meet = intersect(meet, ideals[i]);

  int needed = *vanishing_degree(meet);
  for (const auto& J : ideals) needed = std::max(needed, *vanishing_degree(J));

  ClaimReport report;
  report.t_max = t_max.value_or(needed);
  report.tails_zero = report.t_max >= needed && hf_monomial_quotient(meet, report.t_max) == 0;
  for (const auto& J : ideals) {
    report.ideal_sums.push_back(hilbert_function_table(J, report.t_max).total());
  }
  report.intersection_sum = hilbert_function_table(meet, report.t_max).total();
  report.lhs = report.intersection_sum;
  const std::uint64_t sum = std::accumulate(report.ideal_sums.begin(), report.ideal_sums.end(), std::uint64_t{0});
  report.rhs = static_cast<std::int64_t>(sum) - static_cast<std::int64_t>(ideals.size()) + 1;
  report.holds = report.tails_zero && static_cast<std::int64_t>(report.lhs) == report.rhs;
  return report;
}

bool annihilator_membership(const Polynomial& op, const Polynomial& form) {
  return apply_differential(op, form).is_zero();
}

bool annihilator_membership(const Polynomial& op, const CoprimeForm& form) {
  return annihilator_membership(op, form.to_polynomial());
}

}  // namespace waring
