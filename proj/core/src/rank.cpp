#include "waring/rank.hpp"

#include <limits>

#include "waring/error.hpp"

namespace waring {

namespace {

RankValue rank_from_sorted(const std::vector<int>& ascending) {
  RankValue r = 1;
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    r = checked_mul(r, static_cast<RankValue>(ascending[i]) + 1);
  }
  return r;
}

RankValue to_rank_value(const Integer& z) {
  if (z < 0 || !z.fits_ulong_p()) throw ResourceError("rank value exceeds 64-bit range");
  return static_cast<RankValue>(z.get_ui());
}

void enumerate_ascending(unsigned parts, unsigned remaining, int min_part, std::vector<int>& current,
                         std::vector<SurveyRow>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back({current, rank_from_sorted(current)});
    return;
  }
  // Each of the remaining `parts` entries is >= min_part.
  for (int a = min_part; static_cast<unsigned>(a) * parts <= remaining; ++a) {
    current.push_back(a);
    enumerate_ascending(parts - 1, remaining - static_cast<unsigned>(a), a, current, out);
    current.pop_back();
  }
}

}  // namespace

RankValue rank_monomial(const Monomial& m) {
  if (m.size() <= 1) return 1;
  return rank_from_sorted(m.sorted_exponents());
}

RankValue rank_coprime_sum(const CoprimeForm& form) {
  if (form.degree() == 1) return 1;
  RankValue total = 0;
  for (const auto& m : form.monomials()) total += rank_monomial(m);
  return total;
}

GenericRank generic_rank(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DomainError("generic rank needs n >= 1 and d >= 1");
  const Integer count = binomial(d + n - 1, d);
  Integer q;
  mpz_cdiv_q_ui(q.get_mpz_t(), count.get_mpz_t(), n);
  GenericRank out;
  out.value = to_rank_value(q);
  out.exceptional = (d == 2 && n >= 2) || (n == 3 && d == 4) || (n == 4 && d == 4) || (n == 5 && d == 4) ||
                    (n == 5 && d == 3);
  return out;
}

MonomialRankWitness max_monomial_rank_3vars(int d) {
  if (d <= 2) throw DomainError("three-variable maximum needs d > 2, got " + std::to_string(d));
  MonomialRankWitness out;
  if (d % 2 == 1) {
    const auto h = static_cast<RankValue>((d + 1) / 2);
    out.value = h * h;
    out.witness = Monomial::from_exponents({1, (d - 1) / 2, (d - 1) / 2});
  } else {
    const auto h = static_cast<RankValue>(d / 2);
    out.value = h * (h + 1);
    out.witness = Monomial::from_exponents({1, d / 2 - 1, d / 2});
  }
  return out;
}

std::uint64_t count_partitions(unsigned d, unsigned n) {
  // table[j] = partitions of j into parts of size <= m; conjugation turns
  // "at most n parts" into "parts of size <= n".
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> table(d + 1, 0);
  table[0] = 1;
  for (unsigned m = 1; m <= n && m <= d; ++m) {
    for (unsigned j = m; j <= d; ++j) {
      table[j] = table[j] > kMax - table[j - m] ? kMax : table[j] + table[j - m];
    }
  }
  return table[d];
}

SurveyResult survey_max_monomial_rank(unsigned n, unsigned d, std::uint64_t cap) {
  if (n == 0 || d == 0) throw DomainError("survey needs n >= 1 and d >= 1");
  const std::uint64_t count = count_partitions(d, n);
  if (count > cap) {
    throw ResourceError("survey of n=" + std::to_string(n) + ", d=" + std::to_string(d) + " needs " +
                        std::to_string(count) + " exponent vectors, above the cap of " + std::to_string(cap));
  }
  SurveyResult out;
  out.table.reserve(count);
  std::vector<int> current;
  for (unsigned parts = 1; parts <= n && parts <= d; ++parts) {
    enumerate_ascending(parts, d, 1, current, out.table);
  }
  const SurveyRow* best = nullptr;
  for (const auto& row : out.table) {
    if (best == nullptr || row.rank > best->rank) best = &row;
  }
  out.value = best->rank;
  out.witness = Monomial::from_exponents(best->exponents);
  return out;
}

RatioReport asymptotic_ratio_report(unsigned n, unsigned k_max) {
  if (n < 3) throw DomainError("ratio report needs n >= 3");
  RatioReport report;
  report.n = n;
  Integer power = 1;
  for (unsigned i = 0; i + 1 < n; ++i) power *= n - 1;
  report.limit = Rational(factorial(n), power);
  report.limit.canonicalize();
  for (unsigned k = 1; k <= k_max; ++k) {
    RatioRow row;
    row.k = k;
    row.degree = (n - 1) * k + 1;
    Exponents e(n, static_cast<int>(k));
    e[0] = 1;
    row.monomial_rank = rank_monomial(Monomial::from_exponents(e));
    row.generic = generic_rank(n, row.degree);
    row.ratio = Rational(Integer(std::to_string(row.monomial_rank)), Integer(std::to_string(row.generic.value)));
    row.ratio.canonicalize();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace waring
