#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/decompose.hpp"
#include "waring/error.hpp"
#include "waring/json_io.hpp"

namespace waring::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResource:
      return kResourceExceeded;
    case ErrorKind::kInternal:
      return kVerificationFailure;
    default:
      return kInputError;
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const WaringError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

std::string field_name(int order) { return order <= 2 ? "Q" : "Q(z" + std::to_string(order) + ")"; }

std::string render_coefficient_on(const CyclotomicNumber& c, const std::string& var, bool leading) {
  std::string sign;
  std::string body;
  if (c.is_rational()) {
    const Rational q = c.rational_value();
    const bool neg = sgn(q) < 0;
    sign = neg ? "-" : "+";
    const Rational mag = abs(q);
    body = mag == 1 ? var : to_string(mag) + "*" + var;
  } else {
    Rational scale;
    const int k = root_of_unity_exponent(c, &scale);
    if (k > 0) {
      sign = sgn(scale) < 0 ? "-" : "+";
      const std::string z = "z" + std::to_string(c.order()) + (k == 1 ? "" : "^" + std::to_string(k));
      const Rational mag = abs(scale);
      body = (mag == 1 ? "" : to_string(mag) + "*") + z + "*" + var;
    } else {
      sign = "+";
      body = "(" + to_string(c) + ")*" + var;
    }
  }
  if (leading) return sign == "-" ? "-" + body : body;
  return " " + sign + " " + body;
}

std::string render_linear(const std::vector<CyclotomicNumber>& linear, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < linear.size(); ++j) {
    if (linear[j].is_zero()) continue;
    out += render_coefficient_on(linear[j], names[j], out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string render_gamma(const CyclotomicNumber& gamma) {
  if (gamma.is_rational()) return to_string(gamma);
  return "(" + to_string(gamma) + ")";
}

std::vector<std::string> indexed_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

std::string ratio_decimal(const Rational& q) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << q.get_d();
  return os.str();
}

void print_verification(const VerificationReport& report, const LeastVariableReport& least, std::ostream& out) {
  out << "expansion: " << (report.expansion_exact ? "exact" : "MISMATCH") << "\n";
  if (!report.expansion_exact) {
    out << "  " << report.mismatch_count << " mismatching monomial(s); first " << report.first_mismatch << "\n";
  }
  out << "degree: " << (report.degree_matches ? "ok" : "MISMATCH") << "\n";
  out << "pairwise independence within blocks: " << (report.blocks_independent ? "ok" : "FAILED") << "\n";
  for (const auto& [a, b] : report.dependent_pairs) out << "  terms " << a << " and " << b << " are proportional\n";
  out << "term count: " << report.term_count << " (rank " << report.expected_rank << ") "
      << (report.count_matches ? "ok" : "MISMATCH") << "\n";
  out << "least-variable property: " << (least.passed() ? "ok" : "FAILED") << "\n";
  for (const auto& f : least.failures) out << "  " << f << "\n";
}

Json verification_json(const VerificationReport& report, const LeastVariableReport& least) {
  return Json{{"passed", report.passed() && least.passed()},
              {"expansion_exact", report.expansion_exact},
              {"mismatch_count", report.mismatch_count},
              {"first_mismatch", report.first_mismatch},
              {"degree_matches", report.degree_matches},
              {"blocks_independent", report.blocks_independent},
              {"term_count", report.term_count},
              {"expected_rank", report.expected_rank},
              {"count_matches", report.count_matches},
              {"least_variable", least.passed()},
              {"least_variable_failures", least.failures}};
}

}  // namespace

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError("range must look like LO:HI with LO <= HI, got '" + text + "'");
  }
}

int cmd_rank(const std::string& form_text, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CoprimeForm form = parse_form(form_text);
    const RankValue rank = rank_coprime_sum(form);
    if (format == Format::kJson) {
      Json monomials = Json::array();
      for (std::size_t i = 0; i < form.size(); ++i) {
        const auto& m = form.monomials()[i];
        monomials.push_back(Json{{"monomial", render_monomial(m, form.variables())},
                                 {"coefficient", to_string(form.coefficients()[i])},
                                 {"rank", rank_monomial(m)},
                                 {"least_variable", form.variables()[m.least_variable()]}});
      }
      out << Json{{"form", render(form)}, {"degree", form.degree()}, {"rank", rank}, {"monomials", monomials}}
                 .dump(2)
          << "\n";
      return kSuccess;
    }
    out << rank << "\n";
    if (form.degree() == 1) {
      out << "  linear form: rank 1\n";
      return kSuccess;
    }
    for (const auto& m : form.monomials()) {
      out << "  " << render_monomial(m, form.variables()) << ": " << rank_monomial(m) << " (least variable "
          << form.variables()[m.least_variable()] << ")\n";
    }
    return kSuccess;
  });
}

int cmd_decompose(const std::string& form_text, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CoprimeForm form = parse_form(form_text);
    const PowerSumDecomposition decomposition = decompose_form(form);
    const VerificationReport report = verify_decomposition(form, decomposition);
    const LeastVariableReport least = least_variable_check(form, decomposition);
    if (!report.passed() || !least.passed()) {
      err << "error: refusing to print a decomposition that failed verification\n";
      print_verification(report, least, err);
      return static_cast<int>(kVerificationFailure);
    }
    if (format == Format::kJson) {
      out << to_json(decomposition).dump(2) << "\n";
      return static_cast<int>(kSuccess);
    }
    out << render(form) << "\n";
    out << "degree " << form.degree() << ", rank " << rank_coprime_sum(form) << "\n";
    std::size_t shown_block = form.size();
    for (const auto& term : decomposition.terms) {
      if (form.degree() > 1 && term.block != shown_block) {
        shown_block = term.block;
        const auto& m = form.monomials()[term.block];
        out << "block " << term.block + 1 << ": " << (form.coefficients()[term.block] == 1 ? "" : to_string(form.coefficients()[term.block]) + "*")
            << render_monomial(m, form.variables()) << " over " << field_name(field_order_for(m)) << "\n";
      }
      out << "  " << render_gamma(term.gamma) << " * (" << render_linear(term.linear, decomposition.variables)
          << ")^" << decomposition.degree << "\n";
    }
    out << "verified: exact expansion, " << report.term_count << " terms\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_bound(const std::string& form_text, std::optional<int> t_max, Format format, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const ParsedExpression parsed = parse_expression(form_text);
    const Polynomial poly = parsed.to_polynomial();
    if (poly.is_zero()) throw ValidationError("the form is zero");
    const std::size_t bound = catalecticant_lower_bound(poly, t_max);

    std::optional<RankValue> rank;
    std::string note;
    try {
      rank = rank_coprime_sum(parse_form(form_text));
    } catch (const ValidationError& e) {
      note = std::string("not a sum of pairwise coprime monomials (") + e.what() + "); lower bound only";
    }
    if (format == Format::kJson) {
      Json j{{"form", form_text}, {"lower_bound", bound}, {"coprime", rank.has_value()}};
      if (rank) j["rank"] = *rank;
      out << j.dump(2) << "\n";
      return kSuccess;
    }
    out << bound << "\n";
    if (rank) {
      out << "  exact rank " << *rank << "\n";
    } else {
      out << "  " << note << "\n";
    }
    return kSuccess;
  });
}

int cmd_verify(const std::string& form_text, const std::string& decomposition_path, Format format,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CoprimeForm form = parse_form(form_text);
    std::ifstream in(decomposition_path);
    if (!in) throw ValidationError("cannot open " + decomposition_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("invalid JSON in ") + decomposition_path + ": " + e.what());
    }
    const PowerSumDecomposition decomposition = decomposition_from_json(j);
    const VerificationReport report = verify_decomposition(form, decomposition);
    const LeastVariableReport least = least_variable_check(form, decomposition);
    const bool passed = report.passed() && least.passed();
    if (format == Format::kJson) {
      out << verification_json(report, least).dump(2) << "\n";
    } else {
      print_verification(report, least, out);
      out << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? kSuccess : kVerificationFailure;
  });
}

int cmd_survey(const SurveyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.ratio) {
      const RatioReport report = asymptotic_ratio_report(options.n, options.k_max);
      if (options.format == Format::kJson) {
        Json rows = Json::array();
        for (const auto& r : report.rows) {
          rows.push_back(Json{{"k", r.k},
                              {"degree", r.degree},
                              {"monomial_rank", r.monomial_rank},
                              {"generic_rank", r.generic.value},
                              {"exceptional", r.generic.exceptional},
                              {"ratio", to_string(r.ratio)}});
        }
        out << Json{{"n", report.n}, {"limit", to_string(report.limit)}, {"rows", rows}}.dump(2) << "\n";
        return kSuccess;
      }
      const char* sep = options.csv ? "," : "\t";
      out << "k" << sep << "d" << sep << "monomial_rank" << sep << "generic_rank" << sep << "ratio" << sep
          << "ratio_decimal\n";
      for (const auto& r : report.rows) {
        out << r.k << sep << r.degree << sep << r.monomial_rank << sep << r.generic.value
            << (r.generic.exceptional ? "*" : "") << sep << to_string(r.ratio) << sep << ratio_decimal(r.ratio)
            << "\n";
      }
      if (!options.csv) {
        out << "limit n!/(n-1)^(n-1) = " << to_string(report.limit) << " = " << ratio_decimal(report.limit) << "\n";
      }
      return kSuccess;
    }

    unsigned lo = 0;
    unsigned hi = 0;
    if (options.range) {
      std::tie(lo, hi) = *options.range;
    } else if (options.d) {
      lo = hi = *options.d;
    } else {
      throw ValidationError("survey needs a degree or --range");
    }
    if (lo == 0) throw ValidationError("degrees start at 1");
    const auto names = indexed_names(options.n);

    struct Row {
      unsigned d;
      SurveyResult survey;
      GenericRank generic;
      Rational ratio;
      std::optional<RankValue> closed_form;
    };
    std::vector<Row> rows;
    for (unsigned d = lo; d <= hi; ++d) {
      Row row{d, survey_max_monomial_rank(options.n, d, options.max_enum), generic_rank(options.n, d), 0, {}};
      row.ratio = Rational(Integer(std::to_string(row.survey.value)), Integer(std::to_string(row.generic.value)));
      row.ratio.canonicalize();
      if (options.n == 3 && d > 2) row.closed_form = max_monomial_rank_3vars(static_cast<int>(d)).value;
      rows.push_back(std::move(row));
    }

    if (options.format == Format::kJson) {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j{{"n", options.n},
               {"degree", r.d},
               {"max_monomial_rank", r.survey.value},
               {"witness", render_exponents(r.survey.witness.full_exponents(), names)},
               {"generic_rank", r.generic.value},
               {"exceptional", r.generic.exceptional},
               {"ratio", to_string(r.ratio)}};
        if (r.closed_form) j["closed_form"] = *r.closed_form;
        if (options.table) {
          Json table = Json::array();
          for (const auto& t : r.survey.table) table.push_back(Json{{"exponents", t.exponents}, {"rank", t.rank}});
          j["table"] = std::move(table);
        }
        arr.push_back(std::move(j));
      }
      out << (rows.size() == 1 ? arr.front() : arr).dump(2) << "\n";
      return kSuccess;
    }

    if (rows.size() == 1 && !options.csv) {
      const Row& r = rows.front();
      out << "n=" << options.n << " d=" << r.d << "\n";
      out << "max monomial rank: " << r.survey.value << " (witness "
          << render_exponents(r.survey.witness.full_exponents(), names) << ")\n";
      if (r.closed_form) out << "closed form: " << *r.closed_form << "\n";
      out << "generic rank: " << r.generic.value
          << (r.generic.exceptional ? " (exceptional case: true generic rank is larger)" : "") << "\n";
      out << "ratio: " << to_string(r.ratio) << "\n";
      if (options.table) {
        out << "exponents\trank\n";
        for (const auto& t : r.survey.table) {
          for (std::size_t i = 0; i < t.exponents.size(); ++i) out << (i ? "," : "") << t.exponents[i];
          out << "\t" << t.rank << "\n";
        }
      }
      return kSuccess;
    }

    const char* sep = options.csv ? "," : "\t";
    out << "d" << sep << "max_monomial_rank" << sep << "witness" << sep << "generic_rank" << sep << "exceptional"
        << sep << "ratio" << sep << "monomial_beats_generic\n";
    for (const auto& r : rows) {
      out << r.d << sep << r.survey.value << sep << render_exponents(r.survey.witness.full_exponents(), names) << sep
          << r.generic.value << sep << (r.generic.exceptional ? "yes" : "no") << sep << to_string(r.ratio) << sep
          << (r.survey.value > r.generic.value ? "yes" : "no") << "\n";
    }
    return kSuccess;
  });
}

std::vector<MonomialIdeal> random_claim_configuration(std::mt19937_64& rng, unsigned max_blocks,
                                                      unsigned max_block_size, int max_exponent) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto r = static_cast<std::size_t>(uniform(1, static_cast<int>(max_blocks)));
  std::vector<std::size_t> sizes(r);
  for (auto& s : sizes) s = static_cast<std::size_t>(uniform(1, static_cast<int>(max_block_size)));
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  for (auto s : sizes) {
    offsets.push_back(n);
    n += s;
  }

  std::vector<MonomialIdeal> ideals;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Exponents> gens;
    for (std::size_t v = 0; v < n; ++v) {
      if (v >= offsets[i] && v < offsets[i] + sizes[i]) continue;
      Exponents e(n, 0);
      e[v] = 1;
      gens.push_back(std::move(e));
    }
    // Shape of the coprime-sum argument: the first block variable is linear,
    // the others carry X^{a+1}. Otherwise every block variable gets a pure
    // power and a few mixed generators are thrown in.
    const bool paper_shape = uniform(0, 1) == 0;
    std::vector<int> caps(sizes[i]);
    for (std::size_t k = 0; k < sizes[i]; ++k) {
      const int power = (paper_shape && k == 0) ? 1 : uniform(1, max_exponent) + 1;
      caps[k] = power;
      Exponents e(n, 0);
      e[offsets[i] + k] = power;
      gens.push_back(std::move(e));
    }
    if (!paper_shape && sizes[i] > 1) {
      const int extra = uniform(0, 2);
      for (int x = 0; x < extra; ++x) {
        Exponents e(n, 0);
        int degree = 0;
        for (std::size_t k = 0; k < sizes[i]; ++k) {
          e[offsets[i] + k] = uniform(0, caps[k] - 1);
          degree += e[offsets[i] + k];
        }
        if (degree > 0) gens.push_back(std::move(e));
      }
    }
    ideals.emplace_back(n, std::move(gens));
  }
  return ideals;
}

int cmd_hf(const HfOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto claim_json = [](const ClaimReport& report) {
      return Json{{"ideal_sums", report.ideal_sums}, {"intersection_sum", report.intersection_sum},
                  {"rhs", report.rhs},               {"t_max", report.t_max},
                  {"tails_zero", report.tails_zero}, {"holds", report.holds}};
    };

    if (options.random_claims > 0) {
      std::mt19937_64 rng(options.seed);
      unsigned failures = 0;
      Json runs = Json::array();
      for (unsigned i = 0; i < options.random_claims; ++i) {
        const auto ideals = random_claim_configuration(rng);
        const ClaimReport report = verify_claim_identity(ideals, options.t_max);
        if (!report.holds) ++failures;
        if (options.format == Format::kJson) {
          runs.push_back(claim_json(report));
        } else {
          out << "config " << i + 1 << ": r=" << ideals.size() << " lhs=" << report.lhs << " rhs=" << report.rhs
              << (report.holds ? " ok" : " FAIL") << "\n";
        }
      }
      if (options.format == Format::kJson) {
        out << Json{{"seed", options.seed}, {"runs", runs}, {"failures", failures}}.dump(2) << "\n";
      } else {
        out << (options.random_claims - failures) << "/" << options.random_claims << " configurations hold\n";
      }
      return failures == 0 ? kSuccess : kVerificationFailure;
    }

    if (options.ideals.empty()) throw ValidationError("hf needs at least one ideal");
    const ParsedIdeals parsed = parse_ideals(options.ideals);
    if (options.claim) {
      const ClaimReport report = verify_claim_identity(parsed.ideals, options.t_max);
      if (options.format == Format::kJson) {
        out << claim_json(report).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < report.ideal_sums.size(); ++i) {
          out << "sum HF(T/J" << i + 1 << ") = " << report.ideal_sums[i] << "\n";
        }
        out << "sum HF(T/intersection) = " << report.intersection_sum << "\n";
        out << "sum of sums - r + 1 = " << report.rhs << "\n";
        out << "t_max = " << report.t_max << (report.tails_zero ? " (tails zero)" : " (tails NOT zero)") << "\n";
        out << (report.holds ? "identity holds" : "identity FAILS") << "\n";
      }
      return report.holds ? kSuccess : kVerificationFailure;
    }

    Json all = Json::array();
    for (std::size_t i = 0; i < parsed.ideals.size(); ++i) {
      const auto& ideal = parsed.ideals[i];
      const auto vanish = vanishing_degree(ideal);
      const int top = options.t_max.value_or(vanish ? *vanish : 10);
      const auto table = hilbert_function_table(ideal, top);
      if (options.format == Format::kJson) {
        all.push_back(Json{{"ideal", options.ideals[i]}, {"values", table.values}, {"partial_sums", table.partial_sums}});
        continue;
      }
      out << "ideal (" << options.ideals[i] << ") in " << parsed.variables.size() << " variables\n";
      out << "t\tHF\tpartial\n";
      for (std::size_t t = 0; t < table.values.size(); ++t) {
        out << t << "\t" << table.values[t] << "\t" << table.partial_sums[t] << "\n";
      }
    }
    if (options.format == Format::kJson) out << Json{{"variables", parsed.variables}, {"ideals", all}}.dump(2) << "\n";
    return kSuccess;
  });
}

}  // namespace waring::cli
