#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isospec/graph.hpp"
#include "isospec/spectral.hpp"

namespace isospec {

/// Outcome of testing G <=[t] G' ("G is spectrally smaller than G' with
/// shift t"): |G| >= |G'| - t and lambda_k(G) <= lambda_{k+t}(G') for
/// every 1 <= k <= |G'| - t.
struct PreorderCheck {
  bool holds = false;
  int shift = 0;
  bool order_condition = false;  // |G| >= |G'| - t
  /// 1-based k of the first index with lambda_k(G) > lambda_{k+t}(G') + tol.
  std::optional<std::size_t> first_violation;
};

/// The comparison is one-sided, lambda_k(G) <= lambda_{k+t}(G') + tol, so
/// round-off on exactly equal eigenvalues never counts as a violation.
PreorderCheck spectrally_less(const Spectrum& smaller, const Spectrum& larger, int t, double tol = kCompareTol);

/// Both relations a vertex contraction G -> G~ = G/~ is expected to
/// satisfy: G <= G~ and G~ <=[t] G with t the shrinking number.
struct ContractionBracketing {
  SimpleGraph quotient;
  int shift = 0;
  PreorderCheck lower;  // G <= G~
  PreorderCheck upper;  // G~ <=[t] G

  bool holds() const noexcept { return lower.holds && upper.holds; }
};

/// The relations are predicted for merges that keep every edge
/// (keeps_every_edge); collapsing parallel edges changes degrees and can
/// break them.
ContractionBracketing verify_contraction_bracketing(const SimpleGraph& g, const VertexMerge& m, LaplacianSign sign,
                                                    double tol = kCompareTol);

/// Guaranteed multiplicity mu - (t1 + t2) of an auxiliary eigenvalue inside
/// a graph bracketed with shifts t1 and t2. Throws NoSurvival if mu <= t1+t2.
int surviving_multiplicity(int mu, int t1, int t2);

/// Three aligned rows for aux <=[t_lower] target <=[t_upper] aux.
///
/// Columns are numbered by the target's 1-based index k. The top row holds
/// the lower bounds lambda_{k-t_lower}(aux), the bottom row the upper bounds
/// lambda_{k+t_upper}(aux). A column is pinned when both bounds exist and
/// agree within tol, which fixes lambda_k(target) without eigensolving it.
struct InterlacingDiagram {
  int t_lower = 0;
  int t_upper = 0;
  int first_column = 1;  // column number of cells[0]; may be <= 0
  std::vector<std::optional<double>> top;
  std::vector<std::optional<double>> middle;
  std::vector<std::optional<double>> bottom;
  std::vector<bool> pinned;                          // per column
  std::vector<std::pair<std::size_t, double>> pins;  // (k, value)

  std::vector<double> pinned_values() const;
};

/// Throws LengthMismatch if the order condition of either relation fails.
InterlacingDiagram render_diagram(const Spectrum& aux, const Spectrum& target, int t_lower, int t_upper,
                                  double tol = kCompareTol);

/// Three-row form: lower and upper are the same auxiliary spectrum and the
/// shift sits on whichever side makes the lengths line up
/// (|mid| = |upper| - t or |mid| = |upper| + t). LengthMismatch otherwise.
InterlacingDiagram render_diagram(const Spectrum& lower, const Spectrum& mid, const Spectrum& upper, int t,
                                  double tol = kCompareTol);

/// Fixed-width text table; pinned target cells are bracketed.
std::string diagram_text(const InterlacingDiagram& d, const std::string& aux_label = "aux",
                         const std::string& target_label = "G");

/// {"t", "t_lower", "t_upper", "first_column", "rows": [[...], [...], [...]],
///  "pinned": [[k, value], ...]}
nlohmann::json diagram_json(const InterlacingDiagram& d);

}  // namespace isospec
