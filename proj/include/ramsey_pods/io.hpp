#pragma once

// JSON and CSV formats.  Every index and coordinate is 1-based on disk.
// Readers throw ParseError on malformed or schema-violating input.

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/paths.hpp>
#include <ramsey_pods/pods.hpp>
#include <ramsey_pods/reductions.hpp>
#include <ramsey_pods/tournament.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rpods {

using Json = nlohmann::json;

auto family_to_json(const VectorFamily & fam) -> Json;
auto family_from_json(const Json & j) -> VectorFamily;

/// One vector per line, comma separated.  q is the column count; n defaults
/// to the largest entry.
auto family_to_csv(const VectorFamily & fam) -> std::string;
auto family_from_csv(std::string_view text, int r, std::optional<int> n = std::nullopt) -> VectorFamily;

/// {"N", "q", "edges": [[u, v, c], ...]} with u -> v.
auto tournament_to_json(const ColoredTournament & t) -> Json;
auto tournament_from_json(const Json & j) -> ColoredTournament;

/// {"N", "q", "colors": [[u, v, c], ...]} with u < v.
auto coloring_to_json(const OrderedColoring & k) -> Json;
auto coloring_from_json(const Json & j) -> OrderedColoring;

/// {"mode", "constraint": {"avoid": i} | {"allow": [...]}, "vertices", "length"}.
auto path_to_json(const PathCertificate & cert) -> Json;
auto path_from_json(const Json & j) -> PathCertificate;

/// {"blocks": [[...], ...]}; q is the largest color mentioned unless given.
auto partition_to_json(const ColorPartition & p) -> Json;
auto partition_from_json(const Json & j, std::optional<int> q = std::nullopt) -> ColorPartition;

/// {"q", "r", "n", "apices": [[...], ...]}.
auto packing_to_json(const Packing & p) -> Json;
auto packing_from_json(const Json & j) -> Packing;

auto read_text_file(const std::filesystem::path & path) -> std::string;
auto read_json_file(const std::filesystem::path & path) -> Json;
auto write_text_file(const std::filesystem::path & path, std::string_view text) -> void;

} // namespace rpods
