#pragma once

#include <cstdio>
#include <string>

namespace ofdma {

/// Decimal with 9 significant digits, the fixed format of every CSV field.
inline std::string format_sig9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

}  // namespace ofdma
