#pragma once

#include <string>

#include "windsentry/model.hpp"

namespace windsentry {

// Versioned JSON model blob: algorithm id, feature set, hyperstate,
// seed, fitted state, and holdout metrics. Doubles round-trip exactly.
std::string model_json_text(const FittedModel& model);
void save_model(const std::string& path, const FittedModel& model);

FittedModel parse_model_json(const std::string& text,
                             const std::string& origin);
FittedModel load_model(const std::string& path);

}  // namespace windsentry
