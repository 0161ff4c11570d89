#pragma once

#include "arinf/hodge.hpp"
#include "arinf/lattice.hpp"

#include <json.hpp>

#include <string>

namespace arinf {

using Json = nlohmann::ordered_json;

// Variety-spec file: {"name", "dim", "field": "C"|"R", "hodge": [[...]],
// "h_plus": [...], "h_minus": [...]}; hodge row index is p, column q.
// Throws std::invalid_argument with a field-precise message on bad input.
HodgeDatum datum_from_json(const Json& j);
HodgeDatum load_datum(const std::string& path);
// Resolves a builtin name or a filesystem path.
HodgeDatum resolve_datum(const std::string& spec);

Json datum_to_json(const HodgeDatum& d);

// Versioned report envelope shared by every CLI subcommand.
Json report_envelope(const std::string& command, const Window& window);

}  // namespace arinf
