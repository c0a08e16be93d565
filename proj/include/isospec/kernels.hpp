#pragma once

// Data-parallel inner loops of the eigensolver and spectrum comparisons.
//
// Every kernel has a portable scalar reference and, where the build and the
// CPU allow it, an AVX2/FMA variant. The variant is picked once at first use
// from CPUID; ISOSPEC_SIMD=scalar in the environment pins the scalar path.

#include <cstddef>
#include <span>
#include <string_view>

namespace isospec::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;
/// Best ISA this build can use on this CPU.
Isa detect_isa() noexcept;
Isa active_isa() noexcept;
/// Throws Error(InvalidRange) if the ISA is not supported here.
void set_active_isa(Isa isa);

/// Sum of x[i]*y[i]; lengths must match.
double dot(std::span<const double> x, std::span<const double> y);
/// Plane rotation in place: x <- c*x - s*y, y <- s*x + c*y.
void rotate(std::span<double> x, std::span<double> y, double c, double s);
/// max |x[i]-y[i]|, 0 for empty input.
double max_abs_diff(std::span<const double> x, std::span<const double> y);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n) noexcept;
void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept;
double max_abs_diff(const double* x, const double* y, std::size_t n) noexcept;
}  // namespace scalar

#if defined(ISOSPEC_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n) noexcept;
void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept;
double max_abs_diff(const double* x, const double* y, std::size_t n) noexcept;
}  // namespace avx2
#endif

}  // namespace isospec::kernels
