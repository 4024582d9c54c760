#pragma once

#include <charconv>
#include <string>

namespace laglead {

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace laglead
