#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace percolab {

// Shortest decimal that parses back to the same double.
inline std::string double_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v || (std::isnan(back) && std::isnan(v))) return probe;
  }
  return buf;
}

}  // namespace percolab
