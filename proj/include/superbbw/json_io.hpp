#pragma once

#include "json.hpp"

#include "superbbw/bbw.hpp"
#include "superbbw/characters.hpp"
#include "superbbw/reciprocity.hpp"

namespace superbbw {

// Every JSON document the CLI emits carries this schema tag; golden tests
// pin it, so bump it on any layout change.
inline constexpr const char* kJsonSchema = "superbbw/1";

// Weights and rationals render as the literal strings parse_weight and
// parse_rat accept, so documents round-trip through the parser.
nlohmann::json weight_json(const Weight& w);

// Sorted [{"hw": ..., "coeff": ...}] rows.
nlohmann::json g0_sum_json(const VirtualG0Sum& v);

// Sorted [{"weight": ..., "mult": ...}] rows.
nlohmann::json character_json(const FormalCharacter& ch);

nlohmann::json constituent_json(const Constituent& con);

nlohmann::json reciprocity_json(const ReciprocityReport& rep);

}  // namespace superbbw
