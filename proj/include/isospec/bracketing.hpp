#pragma once

// Spectrum determination by bracketing with auxiliary graphs.
//
// A certificate lists auxiliary graphs G_j with shifts t'_j, t''_j such that
// G_j <=[t'_j] G <=[t''_j] G_j, and for each a set of eigenvalues of G_j
// whose multiplicity there exceeds t_j = t'_j + t''_j. Each such eigenvalue
// survives in G with multiplicity at least (its multiplicity in G_j) - t_j.
// When the sets are pairwise disjoint and the surviving counts plus the
// a-priori known eigenvalues add up to |G| (or |G| - 1, the last value then
// following from trace = |G|), the spectrum of G is determined without ever
// diagonalising G.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isospec/graph.hpp"
#include "isospec/preorder.hpp"
#include "isospec/spectral.hpp"

namespace isospec {

/// One value of an arm's spectral set together with the multiplicity it
/// is claimed to have in the auxiliary spectrum. A plain multiset Lambda
/// with a common multiplicity mu is the special case of equal entries.
struct LambdaEntry {
  double value = 0.0;
  int multiplicity = 0;
  std::string symbol;  // exact expression when known, else empty
};

struct BracketingArm {
  std::string aux_source;  // family string or file path, for reports
  SimpleGraph aux;
  int t_lower = 0;  // aux <=[t_lower] target
  int t_upper = 0;  // target <=[t_upper] aux
  std::vector<LambdaEntry> lambda;

  int total_shift() const noexcept { return t_lower + t_upper; }
  EigenvalueSet lambda_set() const;
  /// Sum over entries of (multiplicity - total_shift).
  int surviving_count() const noexcept;
};

struct BracketingCertificate {
  std::string target_source;
  int order = 0;
  LaplacianSign sign = LaplacianSign::Standard;
  std::vector<double> known;  // eigenvalues of the target known a priori
  std::vector<BracketingArm> arms;
  std::vector<std::string> notes;  // carried into reports, e.g. harvested sets

  /// Number of eigenvalues the certificate pins: surviving counts + known.
  int determined_count() const noexcept;
};

struct ConditionResult {
  bool passed = false;
  bool checked = true;  // false when skipped (relations trusted)
  std::string detail;
};

struct ArmValidation {
  std::optional<PreorderCheck> lower;  // aux <=[t_lower] target
  std::optional<PreorderCheck> upper;  // target <=[t_upper] aux
  std::vector<std::string> problems;
};

struct ValidationReport {
  std::vector<ArmValidation> arms;
  ConditionResult relations;       // (1) bracketing relations
  ConditionResult multiplicities;  // (2) multiplicity in aux and mu > t
  ConditionResult disjointness;    // (3) pairwise disjoint sets
  ConditionResult counting;        // (4) counts add up to n or n-1

  bool passed() const noexcept {
    return relations.passed && multiplicities.passed && disjointness.passed && counting.passed;
  }
  /// First failing condition number (1..4), 0 if none.
  int first_failure() const noexcept;
};

struct ValidationOptions {
  double preorder_tol = kCompareTol;
  double cluster_tol = kClusterTol;
  double disjoint_gap = kDisjointGap;
};

/// Checks the four conditions. The relations are verified against the
/// computed spectra of the target and every auxiliary graph.
ValidationReport validate_certificate(const BracketingCertificate& c, const SimpleGraph& target, LaplacianSign sign,
                                      const ValidationOptions& options = {});

/// Same, but condition (1) is taken on trust (e.g. the target is known to be
/// a contraction of every auxiliary graph, or vice versa) and reported as
/// not checked. The target is never diagonalised on this path.
ValidationReport validate_certificate_trusting_relations(const BracketingCertificate& c, LaplacianSign sign,
                                                         const ValidationOptions& options = {});

/// Union of every arm's surviving values and the known values, completed
/// through the trace when exactly one value is missing. Never computes the
/// target spectrum. Throws CountMismatch, NoSurvival or NegativeFill.
Spectrum determine_spectrum(const BracketingCertificate& c, double tol = kCompareTol);

/// Fills the unknown entries of a bipartite graph's spectrum using
/// lambda <-> 2 - lambda. Throws Unrecoverable when the symmetry does not pin
/// every gap.
Spectrum bipartite_complete(const std::vector<std::optional<double>>& partial, double tol = kClusterTol);

using GraphResolver = std::function<SimpleGraph(const std::string&)>;

/// Certificate file:
/// {"target": src, "order": n, "sign": "standard"|"signless", "known": [v...],
///  "arms": [{"aux": src, "t_lower": a, "t_upper": b,
///            "lambda": [{"value": v, "mult": m}, ...]}]}
/// where v is a number or an expression string such as "1-sqrt(2/5)".
BracketingCertificate parse_certificate(const nlohmann::json& j, const GraphResolver& resolve);
nlohmann::json certificate_json(const BracketingCertificate& c);

/// Plain-text report of a validation, including the interlacing diagram of
/// every arm when the relations were checked.
std::string validation_text(const BracketingCertificate& c, const ValidationReport& report,
                            const std::optional<Spectrum>& target_spectrum);
nlohmann::json validation_json(const ValidationReport& report);

}  // namespace isospec
