#include "frattini/satlog.hpp"

#include <cstdio>

namespace frattini {

std::string SatLog::describe() const {
  if (sat_) return "2^(huge)";
  double v = value();
  if (std::isfinite(v) && v < 1e15) {
    char buf[64];
    if (v == std::floor(v) && v < 1e15)
      std::snprintf(buf, sizeof buf, "%.0f", v);
    else
      std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "2^%.6g", log2_);
  return buf;
}

}  // namespace frattini
