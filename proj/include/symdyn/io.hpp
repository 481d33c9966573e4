#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "symdyn/grid2d.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

using Json = nlohmann::ordered_json;

using AnySpec = std::variant<SubshiftSpec, Grid2dSpec>;

/// Spec documents:
///   {"type":"full","alphabet":["0","1"]}
///   {"type":"sft","alphabet":["0","1"],"forbidden":["11"]}
///   {"type":"sgap","finite":[0,1]}
///   {"type":"sgap","extra":[],"from":1}
///   {"type":"grid2d","alphabet":["0","1"],"forbidden":[{"cells":[[0,0,"1"],[1,0,"1"]]}]}
/// Unknown keys are rejected. Errors are parse_error (not JSON), schema_error
/// (wrong keys or types) or semantic_error (well-typed but meaningless).
AnySpec spec_from_json(const Json& doc);
AnySpec parse_spec(const std::string& text);
AnySpec load_spec(const std::filesystem::path& path);

SubshiftSpec subshift_spec_from_json(const Json& doc);
Grid2dSpec grid2d_spec_from_json(const Json& doc);

/// Canonical form; parse_spec(to_json(s).dump()) == s.
Json to_json(const SubshiftSpec& spec);
Json to_json(const Grid2dSpec& spec);
Json to_json(const AnySpec& spec);
/// Canonical text: two-space indented JSON with a trailing newline.
std::string canonical_text(const AnySpec& spec);

/// Pattern documents: {"cells":[[x,y,"symbol"],...]}.
Pattern2D pattern_from_json(const Json& doc, const Alphabet& alphabet);
Pattern2D load_pattern(const std::filesystem::path& path, const Alphabet& alphabet);
Json to_json(const Pattern2D& pattern, const Alphabet& alphabet);

Json parse_json(const std::string& text);
std::string read_file(const std::filesystem::path& path);

}  // namespace symdyn
