#pragma once

#include <charconv>
#include <string>

namespace su11 {

// Shortest decimal representation that round-trips to the same double;
// deterministic across runs and platforms with IEEE-754 binary64.
inline std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace su11
