#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gkw/grid.hpp"

namespace gkw::io {

/// "x,value" CSV with a header row; every number printed with 17
/// significant digits so that parsing recovers the exact doubles.
std::string field_to_csv(const Field& f);
Field field_from_csv(const std::string& text);

/// {"half_length": L, "num_points": N, "values": [...]}.
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

/// Shortest-round-trip-safe decimal rendering (17 significant digits).
std::string format_double(double v);

/// Write via a temporary sibling file and rename, so readers never see a
/// partially written result.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace gkw::io
