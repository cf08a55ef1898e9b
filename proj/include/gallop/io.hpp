#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace gallop {

/// Writes via a temporary sibling and rename so readers never observe a
/// partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace gallop
