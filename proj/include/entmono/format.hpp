#pragma once

#include <cstdio>
#include <string>

namespace entmono {

/// Reals in all CLI output: 12 significant digits, '.' decimal separator.
inline std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace entmono
