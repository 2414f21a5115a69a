#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace chordiv::cli {

// 12 significant digits; negative zero prints as 0.
inline std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Shortest decimal that reads back to the same double.
inline std::string roundtrip(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace chordiv::cli
