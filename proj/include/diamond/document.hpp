#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diamond/order.hpp"
#include "diamond/system.hpp"

namespace diamond {

using Json = nlohmann::ordered_json;

/// A rewriting system together with an optional termination certificate, as
/// read from or written to a JSON document:
///
///   {"field": "Q" | "Fp", "p": 2,
///    "generators": ["x", "y", "z"],
///    "rules": [{"lhs": "x*y*z", "rhs": "x^3 + y^3 + z^3"}],
///    "certificate": {"measure": {"x*y*z": 3, "y": 1}}}
///
/// A deglex certificate reads {"deglex": {"weights": {"x": 1}, "order": ["z", "y", "x"]}};
/// both keys are optional (unit weights, generator order).
struct SystemDocument {
  System system;
  std::optional<Certificate> certificate;
};

/// Throws ParseError naming the offending field, e.g. "rules[1].rhs: unknown
/// generator 'w'".
SystemDocument parse_document(std::string_view text);
SystemDocument parse_document_json(const Json& json);

Json certificate_to_json(const Certificate& cert, const Alphabet& alphabet);
Json document_to_json(const SystemDocument& doc);

}  // namespace diamond
