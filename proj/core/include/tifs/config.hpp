#pragma once

#include <string>

#include "tifs/system.hpp"

namespace tifs {

/// Parses the JSON system description
///   {dimension, base_ratio: "<decimal>", vertices: [ids],
///    maps: [{a, O: [row-major MxM], q: [M], tail, head}]}
/// Errors name the offending field path.
SystemConfig parse_config(const std::string& text);

SystemConfig load_config(const std::string& path);

/// Serializes a config back to the same JSON schema.
std::string format_config(const SystemConfig& config);

/// Loads, validates, and returns the system; throws on any violation.
System load_system(const std::string& path);

} // namespace tifs
