#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cli {

std::uint64_t fnv1a64(std::string_view data);

/// Report envelope shared by every subcommand: the fully resolved config,
/// its hash, and the library version. Reruns with the same config and seed
/// produce byte-identical output (no timestamps in artifacts).
nlohmann::json make_envelope(const std::string& command, const nlohmann::json& config);

/// Writes to the path, or stdout when path is empty.
void emit(const std::string& text, const std::string& output_path);

/// Flat key/value rows as CSV with a header line.
std::string to_csv(const nlohmann::json& rows);

}  // namespace cli
