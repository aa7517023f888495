#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "sbx/betti.hpp"
#include "sbx/closed.hpp"
#include "sbx/families.hpp"
#include "sbx/graph_core.hpp"
#include "sbx/sbc.hpp"

namespace sbx {

// Structurally bad input: unparsable JSON, unknown "type", missing keys,
// wrong value shapes, edges naming undeclared vertices. Distinct from
// std::invalid_argument, which the constructors throw when a structurally
// fine value breaks a mathematical invariant.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ParsedInput = std::variant<BipartiteGraph, SimpleGraph, SbcProfile, ClosedGraph>;

// Dispatches on the "type" field. Invariant violations propagate as
// std::invalid_argument from the respective make().
ParsedInput parse_input(const std::string& text);
ParsedInput load_input_file(const std::string& path);

// Emitters produce the canonical compact key order; byte-stable for equal
// values.
nlohmann::ordered_json profile_to_json(const SbcProfile& p);
nlohmann::ordered_json bipartite_to_json(const BipartiteGraph& g);
nlohmann::ordered_json simple_to_json(const SimpleGraph& g);
nlohmann::ordered_json closed_to_json(const ClosedGraph& c);
nlohmann::ordered_json family_to_json(const DisjointFamily& f);
nlohmann::ordered_json support_to_json(const BettiSupport& s);

}  // namespace sbx
