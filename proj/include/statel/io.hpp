#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <string_view>

#include "statel/interpretation.hpp"

namespace statel {

// Model serialization:
//   {"domain": n, "concepts": {name: [indices]}, "roles": {name: [[from,to]]}}
// Output is canonical: names sorted lexicographically, indices and pairs
// ascending, so identical models render byte-identically.
nlohmann::ordered_json model_to_json(const Interpretation& i);
std::string render_model(const Interpretation& i);

Interpretation model_from_json(const nlohmann::json& j);
Interpretation parse_model(std::string_view text);  // throws ParseError

}  // namespace statel
