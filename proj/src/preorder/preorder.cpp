#include "isospec/preorder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isospec/error.hpp"
#include "isospec/number_format.hpp"

namespace isospec {

PreorderCheck spectrally_less(const Spectrum& smaller, const Spectrum& larger, int t, double tol) {
  if (t < 0) throw Error(ErrorKind::InvalidRange, "preorder shift must be non-negative");
  PreorderCheck check;
  check.shift = t;
  const auto n = static_cast<long>(smaller.size());
  const auto n_prime = static_cast<long>(larger.size());
  check.order_condition = n >= n_prime - t;
  if (!check.order_condition) return check;
  for (long k = 1; k <= n_prime - t; ++k) {
    if (smaller[k - 1] > larger[k - 1 + t] + tol) {
      check.first_violation = static_cast<std::size_t>(k);
      return check;
    }
  }
  check.holds = true;
  return check;
}

ContractionBracketing verify_contraction_bracketing(const SimpleGraph& g, const VertexMerge& m, LaplacianSign sign,
                                                    double tol) {
  SimpleGraph quotient = contract(g, m);
  const int t = shrinking_number(m);
  const Spectrum original = spectrum(g, sign);
  const Spectrum contracted = spectrum(quotient, sign);
  return {std::move(quotient), t, spectrally_less(original, contracted, 0, tol),
          spectrally_less(contracted, original, t, tol)};
}

int surviving_multiplicity(int mu, int t1, int t2) {
  if (t1 < 0 || t2 < 0) throw Error(ErrorKind::InvalidRange, "shifts must be non-negative");
  if (mu <= t1 + t2) {
    throw Error(ErrorKind::NoSurvival, "multiplicity " + std::to_string(mu) + " does not exceed total shift " +
                                           std::to_string(t1 + t2));
  }
  return mu - (t1 + t2);
}

std::vector<double> InterlacingDiagram::pinned_values() const {
  std::vector<double> out;
  out.reserve(pins.size());
  for (const auto& [k, value] : pins) out.push_back(value);
  return out;
}

InterlacingDiagram render_diagram(const Spectrum& aux, const Spectrum& target, int t_lower, int t_upper,
                                  double tol) {
  if (t_lower < 0 || t_upper < 0) throw Error(ErrorKind::InvalidRange, "diagram shifts must be non-negative");
  const long n_aux = static_cast<long>(aux.size());
  const long n = static_cast<long>(target.size());
  // aux <=[t_lower] target needs |aux| >= n - t_lower;
  // target <=[t_upper] aux needs n >= |aux| - t_upper.
  if (n_aux < n - t_lower || n < n_aux - t_upper) {
    throw Error(ErrorKind::LengthMismatch, "orders " + std::to_string(n_aux) + " (aux) and " + std::to_string(n) +
                                               " (target) incompatible with shifts " + std::to_string(t_lower) +
                                               "/" + std::to_string(t_upper));
  }
  InterlacingDiagram d;
  d.t_lower = t_lower;
  d.t_upper = t_upper;
  const long first = std::min(1L, 1L - t_upper);
  const long last = std::max({n, n_aux + t_lower, n_aux - t_upper});
  d.first_column = static_cast<int>(first);
  const auto width = static_cast<std::size_t>(last - first + 1);
  d.top.resize(width);
  d.middle.resize(width);
  d.bottom.resize(width);
  d.pinned.assign(width, false);

  auto aux_at = [&](long j) -> std::optional<double> {
    if (j < 1 || j > n_aux) return std::nullopt;
    return aux[static_cast<std::size_t>(j - 1)];
  };
  for (long col = first; col <= last; ++col) {
    const auto idx = static_cast<std::size_t>(col - first);
    d.top[idx] = aux_at(col - t_lower);
    d.bottom[idx] = aux_at(col + t_upper);
    if (col >= 1 && col <= n) d.middle[idx] = target[static_cast<std::size_t>(col - 1)];
    if (col >= 1 && col <= n && d.top[idx] && d.bottom[idx] && std::fabs(*d.top[idx] - *d.bottom[idx]) <= tol) {
      d.pinned[idx] = true;
      d.pins.emplace_back(static_cast<std::size_t>(col), 0.5 * (*d.top[idx] + *d.bottom[idx]));
    }
  }
  return d;
}

InterlacingDiagram render_diagram(const Spectrum& lower, const Spectrum& mid, const Spectrum& upper, int t,
                                  double tol) {
  if (!spectra_equal(lower, upper, tol)) {
    throw Error(ErrorKind::LengthMismatch, "outer rows of a diagram must be the same auxiliary spectrum");
  }
  const auto n_aux = static_cast<long>(upper.size());
  const auto n = static_cast<long>(mid.size());
  if (n == n_aux - t) return render_diagram(upper, mid, 0, t, tol);
  if (n == n_aux + t) return render_diagram(upper, mid, t, 0, tol);
  throw Error(ErrorKind::LengthMismatch, "middle row of length " + std::to_string(n) + " cannot be aligned with " +
                                             std::to_string(n_aux) + " shifted by " + std::to_string(t));
}

std::string diagram_text(const InterlacingDiagram& d, const std::string& aux_label, const std::string& target_label) {
  constexpr std::size_t kCell = 8;
  const std::string top_label = aux_label;
  const std::string bottom_label = aux_label + " [+" + std::to_string(d.t_upper) + "]";
  const std::string mid_label = target_label;
  const std::string top_full = d.t_lower > 0 ? top_label + " [-" + std::to_string(d.t_lower) + "]" : top_label;
  const std::size_t label_width = std::max({top_full.size(), mid_label.size(), bottom_label.size()}) + 1;

  auto cell = [&](const std::optional<double>& v, bool bracket) {
    std::string text = v ? display_value(*v) : std::string();
    if (bracket) text = "[" + text + "]";
    if (text.size() < kCell) text = std::string(kCell - text.size(), ' ') + text;
    return text + " ";
  };
  auto line = [&](const std::string& label, const std::vector<std::optional<double>>& row, bool mark) {
    std::string out = label + std::string(label_width - label.size(), ' ') + "|";
    for (std::size_t i = 0; i < row.size(); ++i) out += cell(row[i], mark && d.pinned[i]);
    return out + "\n";
  };
  std::ostringstream os;
  os << line(top_full, d.top, false) << line(mid_label, d.middle, true) << line(bottom_label, d.bottom, false);
  return os.str();
}

nlohmann::json diagram_json(const InterlacingDiagram& d) {
  auto row = [](const std::vector<std::optional<double>>& cells) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cells) out.push_back(c ? nlohmann::json(canonical_real(*c)) : nlohmann::json(nullptr));
    return out;
  };
  nlohmann::json pins = nlohmann::json::array();
  for (const auto& [k, value] : d.pins) pins.push_back({k, canonical_real(value)});
  return {
      {"t", d.t_lower + d.t_upper},
      {"t_lower", d.t_lower},
      {"t_upper", d.t_upper},
      {"first_column", d.first_column},
      {"rows", {row(d.top), row(d.middle), row(d.bottom)}},
      {"pinned", std::move(pins)},
  };
}

}  // namespace isospec
