#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "posegen/transform.hpp"

namespace posegen {

using Json = nlohmann::json;

// Parses a JSON document; parse failures are rethrown as ConfigError carrying
// `origin` and the line/column of the offending byte.
Json parse_json(std::string_view text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

// Sorted keys, two-space indent, trailing newline. Byte-stable for equal input.
std::string dump_json(const Json& doc);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// Rounds to `digits` significant decimal digits (round-half-even on the
/// printed representation), so that the shortest round-trip printer emits at
/// most that many digits.
double round_sig(double x, int digits);

Json vec3_to_json(const Vec3& v, int digits);
Vec3 vec3_from_json(const Json& j, const std::string& where);
Quat quat_from_json(const Json& j, const std::string& where);  // [w, x, y, z]
Json quat_to_json(const Quat& q, int digits);

double number_at(const Json& j, const char* key, const std::string& where);
const Json& member_at(const Json& j, const char* key, const std::string& where);

}  // namespace posegen
