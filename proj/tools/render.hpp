#pragma once

#include <string>

#include "gelfand/report.hpp"

namespace gelfand::cli {

enum class Format { json, csv, pretty };

Format parse_format(const std::string& name);
/// Renders a result document; output ends with a newline.
std::string render(const Json& doc, Format format);

}  // namespace gelfand::cli
