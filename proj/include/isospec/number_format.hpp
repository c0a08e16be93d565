#pragma once

#include <optional>
#include <string>

namespace isospec {

/// x rounded to 15 significant digits, with |x| < 1e-14 snapped to 0 so
/// that eigensolver round-off never leaks into written records.
double canonical_real(double x);
/// "%.15g" of canonical_real(x).
std::string format_real(double x);

/// "p/q" (or "p") when x is within tol of a fraction with denominator at
/// most max_denominator.
std::optional<std::string> exact_label(double x, double tol = 1e-9, int max_denominator = 64);
/// "%.2e" of the raw value, for deviations and residuals.
std::string format_deviation(double x);

/// exact_label if there is one, otherwise 6 significant digits.
std::string display_value(double x, double tol = 1e-9);

}  // namespace isospec
