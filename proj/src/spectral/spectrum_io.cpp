#include "isospec/spectrum_io.hpp"

#include <string>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/number_format.hpp"

namespace isospec {

nlohmann::json spectrum_record(const Spectrum& s, LaplacianSign sign) {
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (double v : s.values()) eigenvalues.push_back(canonical_real(v));
  return {
      {"order", s.size()},
      {"sign", std::string(to_string(sign))},
      {"eigenvalues", std::move(eigenvalues)},
      {"trace", canonical_real(s.trace())},
  };
}

SpectrumRecord parse_spectrum_record(const nlohmann::json& j) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    auto values = j.at("eigenvalues").get<std::vector<double>>();
    if (values.size() != order) {
      throw Error(ErrorKind::Parse, "spectrum record: order " + std::to_string(order) + " but " +
                                        std::to_string(values.size()) + " eigenvalues");
    }
    return {Spectrum(std::move(values)), parse_sign(j.at("sign").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("spectrum record: ") + e.what());
  }
}

}  // namespace isospec
