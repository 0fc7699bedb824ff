#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

namespace cli = waring::cli;

int main(int argc, char** argv) {
  CLI::App app{"waring: ranks and minimal power-sum decompositions of sums of coprime monomials"};
  app.require_subcommand(1);

  std::string form;
  bool json = false;
  bool pretty = false;
  auto format = [&] { return json && !pretty ? cli::Format::kJson : cli::Format::kPretty; };

  auto* rank = app.add_subcommand("rank", "Waring rank of a sum of pairwise coprime monomials");
  rank->add_option("form", form, "form such as \"x1^2*x2 + x3^3\"")->required();
  rank->add_flag("--json", json, "emit JSON");

  auto* decompose = app.add_subcommand("decompose", "verified minimal power-sum decomposition");
  decompose->add_option("form", form, "form to decompose")->required();
  decompose->add_flag("--json", json, "emit the decomposition as JSON");
  decompose->add_flag("--pretty", pretty, "human-readable output (default)");

  std::optional<int> t_max;
  auto* bound = app.add_subcommand("bound", "catalecticant lower bound for any homogeneous form");
  bound->add_option("form", form, "homogeneous form")->required();
  bound->add_option("--tmax", t_max, "largest catalecticant degree (default: the form's degree)");
  bound->add_flag("--json", json, "emit JSON");

  std::string decomposition_path;
  auto* verify = app.add_subcommand("verify", "check a decomposition JSON file against a form");
  verify->add_option("form", form, "the form")->required();
  verify->add_option("decomposition", decomposition_path, "decomposition JSON file")->required();
  verify->add_flag("--json", json, "emit the report as JSON");

  cli::SurveyOptions survey_opts;
  std::string range;
  unsigned d = 0;
  auto* survey = app.add_subcommand("survey", "maximal monomial rank against the generic rank");
  survey->add_option("n", survey_opts.n, "number of variables")->required()->check(CLI::PositiveNumber);
  auto* d_opt = survey->add_option("d", d, "degree")->check(CLI::PositiveNumber);
  survey->add_option("--range", range, "degree range LO:HI");
  survey->add_flag("--ratio", survey_opts.ratio, "asymptotic ratio table for d = (n-1)k + 1");
  survey->add_option("--kmax", survey_opts.k_max, "largest k for --ratio")->check(CLI::PositiveNumber);
  survey->add_option("--max-enum", survey_opts.max_enum, "cap on enumerated exponent vectors");
  survey->add_flag("--table", survey_opts.table, "include the full exponent table");
  survey->add_flag("--csv", survey_opts.csv, "comma-separated output");
  survey->add_flag("--json", json, "emit JSON");

  cli::HfOptions hf_opts;
  auto* hf = app.add_subcommand("hf", "Hilbert functions of monomial ideal quotients");
  hf->add_option("ideals", hf_opts.ideals, "comma-separated generator lists, e.g. \"x1^2, x2^2\"");
  hf->add_flag("--claim", hf_opts.claim, "check the intersection identity for the given ideals");
  hf->add_option("--random", hf_opts.random_claims, "check the identity on this many random configurations");
  hf->add_option("--seed", hf_opts.seed, "seed for --random");
  hf->add_option("--tmax", hf_opts.t_max, "largest degree");
  hf->add_flag("--json", json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  std::ios::sync_with_stdio(false);
  if (rank->parsed()) return cli::cmd_rank(form, format(), std::cout, std::cerr);
  if (decompose->parsed()) return cli::cmd_decompose(form, format(), std::cout, std::cerr);
  if (bound->parsed()) return cli::cmd_bound(form, t_max, format(), std::cout, std::cerr);
  if (verify->parsed()) return cli::cmd_verify(form, decomposition_path, format(), std::cout, std::cerr);
  if (survey->parsed()) {
    survey_opts.format = format();
    if (!range.empty()) {
      try {
        survey_opts.range = cli::parse_range(range);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kInputError;
      }
    }
    if (d_opt->count() > 0) survey_opts.d = d;
    return cli::cmd_survey(survey_opts, std::cout, std::cerr);
  }
  if (hf->parsed()) {
    hf_opts.format = format();
    return cli::cmd_hf(hf_opts, std::cout, std::cerr);
  }
  return cli::kInputError;
}
