#pragma once

#include "gridsub/enumeration.hpp"
#include "gridsub/flips.hpp"

#include <filesystem>
#include <string>

namespace gridsub {

/// Standalone SVG: points as circles, hull boundary and internal edges as
/// lines, negative-slope edges drawn in red. Output is a pure function of
/// the input.
std::string render_svg(const Subdivision& s);
std::string render_svg(const Triangulation& t);

/// Throws std::runtime_error naming the path on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gridsub
