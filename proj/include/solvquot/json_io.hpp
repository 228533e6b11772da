#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "solvquot/verify.hpp"

namespace solvquot {

inline constexpr const char* kSchemaId = "solvquot/1";

// Serialized result: schema, field, c, weight, b, b_images, slices, kernel,
// presentation and the symbolic check verdicts. Deterministic: term order is
// the global monomial order, key order is fixed.
nlohmann::ordered_json result_json(const ActionSpec& spec, const QuotientPresentation& q,
                                   const VerifyReport* checks);
std::string emit_json(const ActionSpec& spec, const QuotientPresentation& q,
                      const VerifyReport* checks);

// Human-readable summary for the CLI.
std::string emit_text(const ActionSpec& spec, const QuotientPresentation& q);

// Built-in example gallery as (filename, document text) pairs.
std::vector<std::pair<std::string, std::string>> builtin_examples();

} // namespace solvquot
