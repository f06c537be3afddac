#pragma once

#include <string>

namespace sommerfeld::detail {

// Locale-independent shortest-of-%g rendering with the given significant
// digits. Zero (either sign) prints as "0".
std::string format_significant(double value, int digits);

}  // namespace sommerfeld::detail
