#pragma once

#include <cstdio>
#include <string>

namespace hhm::detail {

// Compact rendering of a double for messages and labels.
inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace hhm::detail
