#pragma once

#include <string>

#include "noiselab/randfield.hpp"

namespace noiselab {

/// JSON schema: {"d": int, "N": int, "coefficients": [[[k...], re, im], ...]}.
/// Only nonzero coefficients are listed and every |k| must be <= N.
std::string field_to_json(const SpectralField& field);
SpectralField field_from_json(const std::string& text,
                              std::int64_t coeff_budget = kDefaultCoeffBudget);

std::string norm_report_to_json(const struct NormReport& report);
std::string fb_triple_to_json(const struct FBNormTriple& triple);

}  // namespace noiselab
