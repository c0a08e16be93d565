#include <cmath>

#include "isospec/kernels.hpp"

namespace isospec::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double max_abs_diff(const double* x, const double* y, std::size_t n) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(x[i] - y[i]));
  return m;
}

}  // namespace isospec::kernels::scalar
