#pragma once

#include <string>

#include <json.hpp>

#include "niho/distribution.hpp"
#include "niho/fields.hpp"
#include "niho/params.hpp"

namespace niho {

// Distribution document: spec fields, derived parameters, and the weight
// list with decimal-string frequencies. parse(print(x)) == x.
nlohmann::json distribution_to_json(const CodeSpec& spec, const DerivedParams& d,
                                    const WeightDistribution& dist);
std::pair<CodeSpec, WeightDistribution> distribution_from_json(const nlohmann::json& j);

nlohmann::json condition_report_to_json(const CodeSpec& spec, const DerivedParams& d,
                                        const ConditionReport& rep);

// Debug dump {p, l, m, modulus, gamma} for cross-implementation comparison.
nlohmann::json tower_to_json(const FieldTower& tower);

std::string distribution_text(const CodeSpec& spec, const DerivedParams& d,
                              const WeightDistribution& dist);
std::string derive_text(const CodeSpec& spec, const DerivedParams& d,
                        const ConditionReport& rep);

}  // namespace niho
