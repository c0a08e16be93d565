#include "isospec/number_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace isospec {

namespace {

std::string printf_g(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

double canonical_real(double x) {
  if (std::fabs(x) < 1e-14) return 0.0;
  return std::strtod(printf_g(x, 15).c_str(), nullptr);
}

std::string format_real(double x) { return printf_g(canonical_real(x), 15); }

std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::optional<std::string> exact_label(double x, double tol, int max_denominator) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_denominator; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::fabs(x - p / static_cast<double>(q)) > tol) continue;
    const long num = static_cast<long>(p);
    // The first matching denominator is already in lowest terms.
    if (q == 1) return std::to_string(num);
    if (std::gcd(num, q) != 1) continue;
    return std::to_string(num) + "/" + std::to_string(q);
  }
  return std::nullopt;
}

std::string display_value(double x, double tol) {
  if (auto label = exact_label(x, tol)) return *label;
  return printf_g(canonical_real(x), 6);
}

}  // namespace isospec
