#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace nway {

// Data or model error; the CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Compact, locale-independent float formatting for output files.
inline std::string format_double(double v, int significant = 10) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

// 95% Wilson score interval for a binomial proportion.
struct Interval {
  double low = 0.0;
  double high = 1.0;
};

inline Interval wilson95(long long successes, long long trials) {
  if (trials <= 0) return {0.0, 1.0};
  const double z = 1.959963984540054;  // two-sided 95%
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {center - half, center + half};
}

}  // namespace nway
