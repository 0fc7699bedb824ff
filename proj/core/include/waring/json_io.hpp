#pragma once

#include <nlohmann/json.hpp>

#include "waring/cyclotomic.hpp"
#include "waring/decompose.hpp"
#include "waring/forms.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

/// {"order": N, "coeffs": ["p/q", ...]} with phi(N) entries.
Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j);

/// {"variables": [...], "degree": d, "terms": [{"coefficient": "p/q",
/// "exponents": [...]}, ...]}
Json to_json(const CoprimeForm& form);
CoprimeForm form_from_json(const Json& j);

/// {"degree": d, "variables": [...], "terms": [{"gamma": ..., "linear":
/// [...], "block": i, "point": [...]}, ...]}
Json to_json(const PowerSumDecomposition& decomposition);
PowerSumDecomposition decomposition_from_json(const Json& j);

}  // namespace waring
