#pragma once

#include <json.hpp>

#include "isospec/spectral.hpp"

namespace isospec {

/// {"order": n, "sign": "standard"|"signless", "eigenvalues": [...],
///  "trace": t}, reals rounded to 15 significant digits.
nlohmann::json spectrum_record(const Spectrum& s, LaplacianSign sign);

struct SpectrumRecord {
  Spectrum spectrum;
  LaplacianSign sign = LaplacianSign::Standard;
};

/// Inverse of spectrum_record; throws Error(Parse) on schema violations.
SpectrumRecord parse_spectrum_record(const nlohmann::json& j);

}  // namespace isospec
