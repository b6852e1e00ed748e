#pragma once

#include <string>

#include "commands.hpp"

namespace singcurve::cli {

enum class Format { Text, Json };

// Keys are sorted in both formats. Text mode writes "inf" as ∞ and ">=" as ≥.
std::string serialize(const Json& report, Format format);

}  // namespace singcurve::cli
