#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "waring/forms.hpp"
#include "waring/rank.hpp"

namespace waring::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kResourceExceeded = 3,
};

enum class Format { kPretty, kJson };

int cmd_rank(const std::string& form_text, Format format, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& form_text, Format format, std::ostream& out, std::ostream& err);
int cmd_bound(const std::string& form_text, std::optional<int> t_max, Format format, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::string& form_text, const std::string& decomposition_path, Format format,
               std::ostream& out, std::ostream& err);

struct SurveyOptions {
  unsigned n = 3;
  std::optional<unsigned> d;
  std::optional<std::pair<unsigned, unsigned>> range;
  bool ratio = false;
  unsigned k_max = 50;
  std::uint64_t max_enum = kDefaultSurveyCap;
  bool table = false;
  bool csv = false;
  Format format = Format::kPretty;
};

int cmd_survey(const SurveyOptions& options, std::ostream& out, std::ostream& err);

struct HfOptions {
  std::vector<std::string> ideals;  // comma-separated generator lists
  bool claim = false;
  unsigned random_claims = 0;
  std::uint64_t seed = 1;
  std::optional<int> t_max;
  Format format = Format::kPretty;
};

int cmd_hf(const HfOptions& options, std::ostream& out, std::ostream& err);

/// Parses "a:b" into an inclusive range.
std::pair<unsigned, unsigned> parse_range(const std::string& text);

/// Random ideals J_1..J_r shaped like the ideals in the coprime-sum rank
/// argument: r <= max_blocks blocks of at most max_block_size variables;
/// J_i holds every variable outside block i as a linear generator and pure
/// powers X^{a+1}, a <= max_exponent, on block i, sometimes with extra
/// mixed generators inside the block.
std::vector<MonomialIdeal> random_claim_configuration(std::mt19937_64& rng, unsigned max_blocks = 3,
                                                      unsigned max_block_size = 3, int max_exponent = 4);

}  // namespace waring::cli
