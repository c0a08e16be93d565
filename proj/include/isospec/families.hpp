#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isospec/bracketing.hpp"
#include "isospec/graph.hpp"
#include "isospec/partition.hpp"
#include "isospec/spectral.hpp"

namespace isospec {

enum class FamilyKind { FuzzyBall, FuzzyBipartite, SubdividedFuzzyBall, SubdividedFuzzyBipartite };

std::string_view to_string(FamilyKind kind) noexcept;
bool is_subdivided(FamilyKind kind) noexcept;
bool is_bipartite_family(FamilyKind kind) noexcept;

/// r for every kind; p only for the bipartite kinds.
struct FamilyParameters {
  int r = 0;
  int p = 0;
};

/// One member of a family: kind, parameters and the partition A of r.
struct FamilySpec {
  FamilyKind kind = FamilyKind::FuzzyBall;
  FamilyParameters params;
  Partition partition;

  /// Canonical family string, e.g. "subdiv:fuzzy-ball:r=5,A=2+3".
  std::string to_string() const;
};

/// K_r with one pendant per vertex: clique 0..r-1, leaf of i is r+i.
SimpleGraph decorated_complete(int r);
/// K_{p,r} with one pendant on each of the r vertices of the second side:
/// side one 0..p-1, side two p..p+r-1, leaf of p+i is p+r+i.
SimpleGraph decorated_complete_bipartite(int p, int r);

/// Merges consecutive leaves first_leaf, first_leaf+1, ... into blocks of
/// sizes a_1, ..., a_s (ascending parts).
VertexMerge pendant_merge(int order, int first_leaf, const Partition& a);

/// K^_r(A); throws InvalidPartition unless A partitions r.
SimpleGraph fuzzy_ball(int r, const Partition& a);
/// K^_{p,r}(A); throws InvalidPartition unless A partitions r.
SimpleGraph fuzzy_bipartite(int p, int r, const Partition& a);
/// S(K^_r)(A) or S(K^_{p,r})(A): the decorated graph is subdivided first and
/// its leaves (still pendant) are contracted per A afterwards.
SimpleGraph subdivided_family(const FamilySpec& base);
SimpleGraph build_member(const FamilySpec& spec);

/// Result of parsing a graph or family string.
///
///   complete:n=7                       K_7
///   complete-bipartite:p=3,q=5         K_{3,5}
///   fuzzy-ball:r=6,A=2+2+2             a family member
///   fuzzy-bipartite:p=2,r=5,A=4+1
///   subdiv:fuzzy-ball:r=5,A=2+3        subdivided member (contract after)
///   subdiv:complete:n=6                any other graph, subdivided
///   fuzzy-ball:r=6,s=3                 a whole family (no A; s optional)
struct ParsedSpec {
  std::optional<FamilySpec> member;
  std::optional<FamilyKind> family_kind;  // set for families and members
  FamilyParameters params;
  std::optional<int> s;                   // from "s=" (family form)
  std::optional<SimpleGraph> graph;       // set for everything but families
};

/// Throws Error(Parse) with a message naming the bad token, or the
/// construction errors (InvalidPartition, InvalidRange) of the generators.
ParsedSpec parse_graph_spec(std::string_view text);

/// Family string when the text contains ':', edge-list file path otherwise.
SimpleGraph load_graph(const std::string& source);

struct MemberReport {
  Partition partition;
  int order = 0;
  std::size_t edges = 0;
  DegreeList degrees;
  Spectrum standard;
  Spectrum signless;
};

struct PairReport {
  std::size_t first = 0;
  std::size_t second = 0;
  double deviation_standard = 0.0;
  double deviation_signless = 0.0;
  bool isospectral_standard = false;
  bool isospectral_signless = false;
  bool degree_lists_differ = false;
  std::optional<bool> isomorphic;  // exhaustive check, only up to the cap
  bool equal_edge_count = false;
  /// Equal standard spectra and equal edge counts, which carries
  /// isospectrality over to the equilateral metric graphs.
  bool metric_isospectral = false;

  bool non_isomorphic() const noexcept { return degree_lists_differ || isomorphic == false; }
};

struct FamilyReport {
  FamilyKind kind = FamilyKind::FuzzyBall;
  FamilyParameters params;
  int s = 0;
  double tol = kCompareTol;
  std::vector<MemberReport> members;
  std::vector<PairReport> pairs;

  bool all_isospectral() const noexcept;
  bool all_non_isomorphic() const noexcept;
  bool all_metric_isospectral() const noexcept;
  double max_deviation(LaplacianSign sign) const noexcept;
};

/// Builds every s-partition member of the family and compares all pairs.
/// Throws InvalidRange for parameters outside the family's range
/// (fuzzy balls need r >= 4 and 2 <= s <= r-1; bipartite kinds need
/// p >= 1, r >= 2 and 1 <= s <= r).
FamilyReport run_family_experiment(FamilyKind kind, FamilyParameters params, int s, double tol = kCompareTol);

nlohmann::json family_report_json(const FamilyReport& report);
std::string family_report_text(const FamilyReport& report);

/// The two-arm bracketing certificate of a family member: the decorated
/// graph with shift r-s above, the graph with every leaf block merged into
/// one with shift s-1 below. Fuzzy balls and fuzzy bipartite graphs use
/// closed-form sets (1 +- 1/sqrt(p+1) for K^_{p,r}); the subdivided kinds
/// harvest theirs from the auxiliary spectra. Requires s >= 2.
BracketingCertificate certificate_for(const FamilySpec& member, LaplacianSign sign);

/// Clusters of aux with multiplicity above shift, skipping values within
/// kDisjointGap of anything in exclude.
std::vector<LambdaEntry> harvest_lambda(const Spectrum& aux, int shift, const std::vector<double>& exclude,
                                        double tol = kClusterTol);

/// Exact expressions for the eigenvalues of S(K^_5) and S(K_6):
/// w+-, w^+-, z+- and 1.
std::vector<LambdaEntry> subdivided_k5_constants();

}  // namespace isospec
