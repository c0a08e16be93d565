#include "isospec/bracketing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "isospec/error.hpp"
#include "isospec/number_format.hpp"

namespace isospec {

EigenvalueSet BracketingArm::lambda_set() const {
  std::vector<double> values;
  values.reserve(lambda.size());
  for (const auto& e : lambda) values.push_back(e.value);
  return EigenvalueSet(std::move(values));
}

int BracketingArm::surviving_count() const noexcept {
  int count = 0;
  for (const auto& e : lambda) count += e.multiplicity - total_shift();
  return count;
}

int BracketingCertificate::determined_count() const noexcept {
  int count = static_cast<int>(known.size());
  for (const auto& arm : arms) count += arm.surviving_count();
  return count;
}

int ValidationReport::first_failure() const noexcept {
  if (!relations.passed) return 1;
  if (!multiplicities.passed) return 2;
  if (!disjointness.passed) return 3;
  if (!counting.passed) return 4;
  return 0;
}

namespace {

struct ValueDemand {
  double value;
  int required;
};

// Entries whose values agree within tol are one eigenvalue; their claimed
// multiplicities add up.
std::vector<ValueDemand> aggregate(const std::vector<LambdaEntry>& entries, double tol) {
  std::vector<ValueDemand> out;
  for (const auto& e : entries) {
    auto same = std::find_if(out.begin(), out.end(), [&](const ValueDemand& d) { return std::fabs(d.value - e.value) <= tol; });
    if (same == out.end()) {
      out.push_back({e.value, e.multiplicity});
    } else {
      same->required += e.multiplicity;
    }
  }
  return out;
}

void check_multiplicities(const BracketingCertificate& c, const std::vector<Spectrum>& aux_spectra,
                          const ValidationOptions& options, ValidationReport& report) {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t j = 0; j < c.arms.size(); ++j) {
    const auto& arm = c.arms[j];
    for (const auto& e : arm.lambda) {
      if (e.multiplicity <= arm.total_shift()) {
        ok = false;
        std::string msg = "arm " + std::to_string(j + 1) + ": mult " + std::to_string(e.multiplicity) + " of " +
                          display_value(e.value) + " does not exceed shift " + std::to_string(arm.total_shift());
        report.arms[j].problems.push_back(msg);
        detail << msg << "; ";
      }
    }
    for (const auto& demand : aggregate(arm.lambda, options.cluster_tol)) {
      std::string msg;
      try {
        const int have = multiplicity_of(aux_spectra[j], demand.value, options.cluster_tol);
        if (have < demand.required) {
          msg = "arm " + std::to_string(j + 1) + ": " + display_value(demand.value) + " has multiplicity " +
                std::to_string(have) + " in aux, claimed " + std::to_string(demand.required);
        }
      } catch (const Error& err) {
        msg = "arm " + std::to_string(j + 1) + ": " + err.what();
      }
      if (!msg.empty()) {
        ok = false;
        report.arms[j].problems.push_back(msg);
        detail << msg << "; ";
      }
    }
  }
  report.multiplicities = {ok, true, ok ? "every claimed multiplicity present and above its shift" : detail.str()};
}

void check_disjointness(const BracketingCertificate& c, const ValidationOptions& options, ValidationReport& report) {
  std::vector<std::pair<std::string, EigenvalueSet>> sets;
  for (std::size_t j = 0; j < c.arms.size(); ++j) sets.emplace_back("arm " + std::to_string(j + 1), c.arms[j].lambda_set());
  if (!c.known.empty()) sets.emplace_back("known", EigenvalueSet(c.known));
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (!sets_disjoint(sets[a].second, sets[b].second, options.disjoint_gap)) {
        ok = false;
        detail << sets[a].first << " and " << sets[b].first << " share a value; ";
      }
    }
  }
  report.disjointness = {ok, true, ok ? "spectral sets pairwise disjoint" : detail.str()};
}

void check_counting(const BracketingCertificate& c, int target_order, ValidationReport& report) {
  const int count = c.determined_count();
  std::string detail = "determined " + std::to_string(count) + " of " + std::to_string(c.order);
  bool ok = count == c.order || count == c.order - 1;
  if (count == c.order - 1) detail += " (last value from the trace)";
  if (target_order >= 0 && target_order != c.order) {
    ok = false;
    detail += "; target has order " + std::to_string(target_order);
  }
  report.counting = {ok, true, detail};
}

ValidationReport validate_common(const BracketingCertificate& c, LaplacianSign sign, const ValidationOptions& options,
                                 const std::optional<Spectrum>& target_spectrum, int target_order) {
  ValidationReport report;
  report.arms.resize(c.arms.size());
  std::vector<Spectrum> aux_spectra;
  aux_spectra.reserve(c.arms.size());
  for (const auto& arm : c.arms) aux_spectra.push_back(spectrum(arm.aux, sign));

  if (target_spectrum) {
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t j = 0; j < c.arms.size(); ++j) {
      auto& av = report.arms[j];
      av.lower = spectrally_less(aux_spectra[j], *target_spectrum, c.arms[j].t_lower, options.preorder_tol);
      av.upper = spectrally_less(*target_spectrum, aux_spectra[j], c.arms[j].t_upper, options.preorder_tol);
      if (!av.lower->holds || !av.upper->holds) {
        ok = false;
        std::string msg = "arm " + std::to_string(j + 1) + ": bracketing relation fails";
        av.problems.push_back(msg);
        detail << msg << "; ";
      }
    }
    report.relations = {ok, true, ok ? "aux <=[t'] G <=[t''] aux for every arm" : detail.str()};
  } else {
    report.relations = {true, false, "relations trusted, not recomputed"};
  }
  check_multiplicities(c, aux_spectra, options, report);
  check_disjointness(c, options, report);
  check_counting(c, target_order, report);
  return report;
}

}  // namespace

ValidationReport validate_certificate(const BracketingCertificate& c, const SimpleGraph& target, LaplacianSign sign,
                                      const ValidationOptions& options) {
  return validate_common(c, sign, options, spectrum(target, sign), target.order());
}

ValidationReport validate_certificate_trusting_relations(const BracketingCertificate& c, LaplacianSign sign,
                                                         const ValidationOptions& options) {
  return validate_common(c, sign, options, std::nullopt, -1);
}

Spectrum determine_spectrum(const BracketingCertificate& c, double tol) {
  std::vector<double> values(c.known.begin(), c.known.end());
  for (const auto& arm : c.arms) {
    for (const auto& e : arm.lambda) {
      const int survivors = e.multiplicity - arm.total_shift();
      if (survivors <= 0) {
        throw Error(ErrorKind::NoSurvival, "value " + display_value(e.value) + " with multiplicity " +
                                               std::to_string(e.multiplicity) + " does not survive shift " +
                                               std::to_string(arm.total_shift()));
      }
      values.insert(values.end(), survivors, e.value);
    }
  }
  const auto count = static_cast<int>(values.size());
  if (count != c.order && count != c.order - 1) {
    throw Error(ErrorKind::CountMismatch,
                "certificate determines " + std::to_string(count) + " eigenvalues, order is " + std::to_string(c.order));
  }
  if (count == c.order - 1) {
    double sum = 0.0;
    for (double v : values) sum += v;
    const double fill = static_cast<double>(c.order) - sum;
    if (fill < -tol || fill > 2.0 + tol) {
      throw Error(ErrorKind::NegativeFill, "trace fill " + format_real(fill) + " outside [0,2]");
    }
    values.push_back(fill);
  }
  return Spectrum(std::move(values));
}

Spectrum bipartite_complete(const std::vector<std::optional<double>>& partial, double tol) {
  std::vector<double> known;
  std::size_t unknown = 0;
  for (const auto& v : partial) {
    if (v) {
      known.push_back(*v);
    } else {
      ++unknown;
    }
  }
  const auto groups = clusters(Spectrum(known), tol);
  auto count_near = [&](double x) {
    for (const auto& g : groups) {
      if (std::fabs(g.value - x) <= tol) return g.multiplicity;
    }
    return 0;
  };
  std::vector<double> filled = known;
  std::size_t added = 0;
  for (const auto& g : groups) {
    const double mirror = 2.0 - g.value;
    if (std::fabs(mirror - g.value) <= tol) continue;
    const int deficit = g.multiplicity - count_near(mirror);
    if (deficit > 0) {
      filled.insert(filled.end(), deficit, mirror);
      added += static_cast<std::size_t>(deficit);
    }
  }
  if (added != unknown) {
    throw Error(ErrorKind::Unrecoverable, "mirror symmetry pins " + std::to_string(added) + " of " +
                                              std::to_string(unknown) + " unknown eigenvalues");
  }
  return Spectrum(std::move(filled));
}

}  // namespace isospec
