#ifndef MTAGG_FORMAT_HPP_
#define MTAGG_FORMAT_HPP_

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "mtagg/error.hpp"

namespace mtagg::fmt {

/// Fixed 12-significant-digit rendering used by every CSV writer.
/// Locale-independent; NaN renders as "nan".
inline std::string number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

/// Locale-independent parse accepting only a complete decimal number with a
/// period separator ("0,5" is rejected).
inline double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text == "nan") return std::nan("");
  double value = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  const auto res = std::from_chars(first, text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::parse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace mtagg::fmt

#endif  // MTAGG_FORMAT_HPP_
