#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cover {

/// Canonical benchmark id ("4.1" .. "H.5") for an OR-Library file name or
/// path: "scp41.txt" -> "4.1", "scpnrg2" -> "G.2", "data/scpa3.txt" -> "A.3".
/// Names that do not match a known pattern come back as their bare stem.
std::string canonical_instance_id(const std::string& path_or_name);

/// Best known optimum for a benchmark instance, looked up by canonical id,
/// OR-Library file name or path. Empty for unknown instances.
std::optional<int> known_optimum(const std::string& path_or_name);

/// The bundled table of all 65 benchmark optima, keyed by canonical id.
const std::vector<std::pair<std::string, int>>& optima_table();

}  // namespace cover
