#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ordram/core.hpp"

namespace ordram::io {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// {"m": m, "t": t, "edges": [[lo, hi, color], ...]} with every edge of [m]
/// listed exactly once, lexicographically.
Json coloring_to_json(const OrderedColoring& coloring);

/// Accepts the edges in any order; rejects duplicates, gaps, out-of-range
/// vertices and colors with a Format error.
OrderedColoring coloring_from_json(const Json& doc);

/// {"kind", "color", "constraint", "edges", "source", "version"} plus "m"
/// when known. "constraint" is {"forbidden": [...]} or {"required": name}.
Json certificate_to_json(const Certificate& cert, int m = 0);
Certificate certificate_from_json(const Json& doc);

Json constraint_to_json(const RelationConstraint& c);
RelationConstraint constraint_from_json(const Json& doc);

Json parse_json(const std::string& text);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

OrderedColoring read_coloring(const std::filesystem::path& path);
/// One edge per line; `source`, when given, is stored with the tool version.
void write_coloring(const std::filesystem::path& path, const OrderedColoring& coloring,
                    std::string_view source = {});
Certificate read_certificate(const std::filesystem::path& path);
void write_certificate(const std::filesystem::path& path, const Certificate& cert, int m = 0);

}  // namespace ordram::io
