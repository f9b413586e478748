#pragma once

#include "json.hpp"

#include "resolv/betti.hpp"
#include "resolv/code.hpp"
#include "resolv/families.hpp"
#include "resolv/field.hpp"

namespace resolv {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteField& field);
Json to_json(const LinearCode& code);
Json to_json(const ProjectiveSystem& system);
Json to_json(const BettiTable& table);
Json to_json(const PurityReport& report, std::size_t n);
Json to_json(const WeightDistribution& distribution);
Json support_to_json(Support support, std::size_t n);

/// All parsers throw Error(Parse) on malformed input; field and code
/// validation errors propagate with their own kinds.
FiniteField field_from_json(const Json& j);
LinearCode code_from_json(const Json& j);
BettiTable betti_from_json(const Json& j);

/// A generator file is a code object, the output of `resolv family`, or a
/// bare {"q": .., "generator": [[..]]}.
LinearCode parse_code_file(const std::string& text);

}  // namespace resolv
