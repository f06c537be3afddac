#include "format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace sommerfeld::detail {

std::string format_significant(double value, int digits) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

}  // namespace sommerfeld::detail
