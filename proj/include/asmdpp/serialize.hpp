#pragma once

#include <json.hpp>

#include "asmdpp/mpoly.hpp"

namespace asmdpp {

// Canonical polynomial JSON:
//   {"vars": [...], "terms": [{"coeff": "<int or p/q>", "exps": [...]}]}
// with terms sorted lexicographically by exponent vector.
nlohmann::json poly_to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& j);

Rat rat_from_string(const std::string& s);  // "p" or "p/q"; throws ParseError

}  // namespace asmdpp
