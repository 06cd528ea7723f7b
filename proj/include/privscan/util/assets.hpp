#pragma once

#include <filesystem>
#include <string>

namespace privscan::util {

/// Root of the bundled asset tree (taxonomy, icon templates, fixtures).
/// Resolution order: PRIVSCAN_ASSETS_DIR env var, then the compiled-in
/// source-tree default.
std::filesystem::path assets_dir();

std::filesystem::path default_taxonomy_path();

/// Reads a whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Atomic write: temp file in the same directory, then rename.
void write_file(const std::filesystem::path& path, std::string_view bytes);

} // namespace privscan::util
