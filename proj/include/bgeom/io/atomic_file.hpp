#pragma once

#include <filesystem>
#include <string>

namespace bgeom::io {

/// Writes `contents` to a temporary file beside `path`, then renames it into
/// place. Throws std::runtime_error.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

/// Reads a whole file. Throws std::runtime_error.
std::string read_file(const std::filesystem::path& path);

}  // namespace bgeom::io
