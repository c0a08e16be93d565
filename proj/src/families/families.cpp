#include "isospec/families.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>

#include "isospec/error.hpp"
#include "isospec/expression.hpp"
#include "isospec/number_format.hpp"
#include "isospec/standard_graphs.hpp"

namespace isospec {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::FuzzyBall: return "fuzzy_ball";
    case FamilyKind::FuzzyBipartite: return "fuzzy_bipartite";
    case FamilyKind::SubdividedFuzzyBall: return "subdivided_fuzzy_ball";
    case FamilyKind::SubdividedFuzzyBipartite: return "subdivided_fuzzy_bipartite";
  }
  return "unknown";
}

bool is_subdivided(FamilyKind kind) noexcept {
  return kind == FamilyKind::SubdividedFuzzyBall || kind == FamilyKind::SubdividedFuzzyBipartite;
}

bool is_bipartite_family(FamilyKind kind) noexcept {
  return kind == FamilyKind::FuzzyBipartite || kind == FamilyKind::SubdividedFuzzyBipartite;
}

namespace {

void check_partition(int r, const Partition& a) {
  if (a.total() != r) {
    throw Error(ErrorKind::InvalidPartition,
                "partition " + a.to_string() + " sums to " + std::to_string(a.total()) + ", expected r=" +
                    std::to_string(r));
  }
}

// Index of the first leaf in the decorated graph (and in its subdivision,
// which keeps the original indices).
int first_leaf(FamilyKind kind, const FamilyParameters& params) {
  return is_bipartite_family(kind) ? params.p + params.r : params.r;
}

SimpleGraph decorated(FamilyKind kind, const FamilyParameters& params) {
  return is_bipartite_family(kind) ? decorated_complete_bipartite(params.p, params.r) : decorated_complete(params.r);
}

Partition all_ones(int r) { return Partition::from_parts(std::vector<int>(static_cast<std::size_t>(r), 1)); }

std::string compact_degrees(const DegreeList& d) {
  std::ostringstream os;
  const auto& v = d.degrees;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (i > 0) os << ' ';
    os << v[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string compact_spectrum(const Spectrum& s) {
  std::ostringstream os;
  const auto groups = clusters(s, kClusterTol);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0) os << ' ';
    os << display_value(groups[i].value);
    if (groups[i].multiplicity > 1) os << '^' << groups[i].multiplicity;
  }
  return os.str();
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string out = is_subdivided(kind) ? "subdiv:" : "";
  if (is_bipartite_family(kind)) {
    out += "fuzzy-bipartite:p=" + std::to_string(params.p) + ",r=" + std::to_string(params.r);
  } else {
    out += "fuzzy-ball:r=" + std::to_string(params.r);
  }
  return out + ",A=" + partition.to_string();
}

SimpleGraph decorated_complete(int r) {
  std::vector<Vertex> anchors(static_cast<std::size_t>(std::max(r, 0)));
  std::iota(anchors.begin(), anchors.end(), 0);
  return with_pendants(complete_graph(r), anchors);
}

SimpleGraph decorated_complete_bipartite(int p, int r) {
  std::vector<Vertex> anchors(static_cast<std::size_t>(std::max(r, 0)));
  std::iota(anchors.begin(), anchors.end(), p);
  return with_pendants(complete_bipartite_graph(p, r), anchors);
}

VertexMerge pendant_merge(int order, int first, const Partition& a) {
  std::vector<std::vector<Vertex>> groups;
  Vertex next = first;
  for (int size : a.parts()) {
    std::vector<Vertex> block(static_cast<std::size_t>(size));
    std::iota(block.begin(), block.end(), next);
    next += size;
    groups.push_back(std::move(block));
  }
  return VertexMerge::from_groups(order, std::move(groups));
}

SimpleGraph fuzzy_ball(int r, const Partition& a) {
  check_partition(r, a);
  const SimpleGraph g = decorated_complete(r);
  return contract(g, pendant_merge(g.order(), r, a));
}

SimpleGraph fuzzy_bipartite(int p, int r, const Partition& a) {
  check_partition(r, a);
  const SimpleGraph g = decorated_complete_bipartite(p, r);
  return contract(g, pendant_merge(g.order(), p + r, a));
}

SimpleGraph subdivided_family(const FamilySpec& base) {
  check_partition(base.params.r, base.partition);
  const SimpleGraph s = subdivide_all(decorated(base.kind, base.params));
  return contract(s, pendant_merge(s.order(), first_leaf(base.kind, base.params), base.partition));
}

SimpleGraph build_member(const FamilySpec& spec) {
  if (is_subdivided(spec.kind)) return subdivided_family(spec);
  if (spec.kind == FamilyKind::FuzzyBipartite) return fuzzy_bipartite(spec.params.p, spec.params.r, spec.partition);
  return fuzzy_ball(spec.params.r, spec.partition);
}

bool FamilyReport::all_isospectral() const noexcept {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairReport& p) { return p.isospectral_standard && p.isospectral_signless; });
}

bool FamilyReport::all_non_isomorphic() const noexcept {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.non_isomorphic(); });
}

bool FamilyReport::all_metric_isospectral() const noexcept {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.metric_isospectral; });
}

double FamilyReport::max_deviation(LaplacianSign sign) const noexcept {
  double worst = 0.0;
  for (const auto& p : pairs) {
    worst = std::max(worst, sign == LaplacianSign::Standard ? p.deviation_standard : p.deviation_signless);
  }
  return worst;
}

FamilyReport run_family_experiment(FamilyKind kind, FamilyParameters params, int s, double tol) {
  const int r = params.r;
  if (is_bipartite_family(kind)) {
    if (params.p < 1 || r < 2 || s < 1 || s > r) {
      throw Error(ErrorKind::InvalidRange, "bipartite family needs p >= 1, r >= 2 and 1 <= s <= r, got p=" +
                                               std::to_string(params.p) + " r=" + std::to_string(r) +
                                               " s=" + std::to_string(s));
    }
  } else if (r < 4 || s < 2 || s > r - 1) {
    throw Error(ErrorKind::InvalidRange, "fuzzy ball family needs r >= 4 and 2 <= s <= r-1, got r=" +
                                             std::to_string(r) + " s=" + std::to_string(s));
  }

  FamilyReport report;
  report.kind = kind;
  report.params = params;
  report.s = s;
  report.tol = tol;

  const auto partitions = enumerate_partitions(r, s);
  std::vector<std::future<MemberReport>> jobs;
  jobs.reserve(partitions.size());
  for (const auto& a : partitions) {
    jobs.push_back(std::async(std::launch::async, [kind, params, a] {
      const SimpleGraph g = build_member({kind, params, a});
      return MemberReport{a,
                          g.order(),
                          g.edge_count(),
                          degree_list(g),
                          spectrum(g, LaplacianSign::Standard),
                          spectrum(g, LaplacianSign::Signless)};
    }));
  }
  // Collected in partition order whatever the completion order.
  for (auto& job : jobs) report.members.push_back(job.get());

  for (std::size_t i = 0; i < report.members.size(); ++i) {
    for (std::size_t j = i + 1; j < report.members.size(); ++j) {
      const auto& a = report.members[i];
      const auto& b = report.members[j];
      PairReport pair;
      pair.first = i;
      pair.second = j;
      const bool same_order = a.order == b.order;
      pair.deviation_standard = same_order ? isospec::max_deviation(a.standard, b.standard) : INFINITY;
      pair.deviation_signless = same_order ? isospec::max_deviation(a.signless, b.signless) : INFINITY;
      pair.isospectral_standard = pair.deviation_standard <= tol;
      pair.isospectral_signless = pair.deviation_signless <= tol;
      pair.degree_lists_differ = !(a.degrees == b.degrees);
      if (a.order <= kDefaultIsomorphismCap && b.order <= kDefaultIsomorphismCap) {
        pair.isomorphic = are_isomorphic_small(build_member({kind, params, a.partition}),
                                               build_member({kind, params, b.partition}));
      }
      pair.equal_edge_count = a.edges == b.edges;
      pair.metric_isospectral = pair.isospectral_standard && pair.equal_edge_count;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

nlohmann::json family_report_json(const FamilyReport& report) {
  auto values = [](const Spectrum& s) {
    nlohmann::json out = nlohmann::json::array();
    for (double v : s.values()) out.push_back(canonical_real(v));
    return out;
  };
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : report.members) {
    members.push_back({
        {"partition", m.partition.to_string()},
        {"order", m.order},
        {"edges", m.edges},
        {"degree_list", m.degrees.degrees},
        {"spectrum", {{"standard", values(m.standard)}, {"signless", values(m.signless)}}},
    });
  }
  auto deviation = [](double d) { return std::isfinite(d) ? nlohmann::json(canonical_real(d)) : nlohmann::json(nullptr); };
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({
        {"a", report.members[p.first].partition.to_string()},
        {"b", report.members[p.second].partition.to_string()},
        {"max_deviation", {{"standard", deviation(p.deviation_standard)}, {"signless", deviation(p.deviation_signless)}}},
        {"isospectral", {{"standard", p.isospectral_standard}, {"signless", p.isospectral_signless}}},
        {"degree_lists_differ", p.degree_lists_differ},
        {"isomorphic", p.isomorphic ? nlohmann::json(*p.isomorphic) : nlohmann::json(nullptr)},
        {"non_isomorphic", p.non_isomorphic()},
        {"equal_edge_count", p.equal_edge_count},
        {"metric_isospectral", p.metric_isospectral},
    });
  }
  nlohmann::json out{
      {"kind", std::string(to_string(report.kind))},
      {"r", report.params.r},
      {"s", report.s},
      {"tol", report.tol},
      {"members", members},
      {"pairs", pairs},
      {"summary",
       {{"all_isospectral", report.all_isospectral()},
        {"all_non_isomorphic", report.all_non_isomorphic()},
        {"all_metric_isospectral", report.all_metric_isospectral()},
        {"max_deviation",
         {{"standard", deviation(report.max_deviation(LaplacianSign::Standard))},
          {"signless", deviation(report.max_deviation(LaplacianSign::Signless))}}}}},
  };
  if (is_bipartite_family(report.kind)) out["p"] = report.params.p;
  return out;
}

std::string family_report_text(const FamilyReport& report) {
  std::ostringstream os;
  os << to_string(report.kind);
  if (is_bipartite_family(report.kind)) os << " p=" << report.params.p;
  os << " r=" << report.params.r << " s=" << report.s << ": " << report.members.size() << " member(s)\n\n";

  std::size_t part_width = 9;
  for (const auto& m : report.members) part_width = std::max(part_width, m.partition.to_string().size());
  auto pad = [](std::string text, std::size_t width) {
    if (text.size() < width) text += std::string(width - text.size(), ' ');
    return text;
  };
  os << pad("partition", part_width + 2) << pad("order", 7) << pad("edges", 7) << "degree list\n";
  for (const auto& m : report.members) {
    os << pad(m.partition.to_string(), part_width + 2) << pad(std::to_string(m.order), 7)
       << pad(std::to_string(m.edges), 7) << compact_degrees(m.degrees) << "\n";
  }
  for (const auto& m : report.members) {
    os << "\n" << m.partition.to_string() << "  standard: " << compact_spectrum(m.standard) << "\n"
       << std::string(m.partition.to_string().size(), ' ') << "  signless: " << compact_spectrum(m.signless) << "\n";
  }
  if (!report.pairs.empty()) {
    os << "\n"
       << pad("pair", 2 * part_width + 6) << pad("dev standard", 14) << pad("dev signless", 14)
       << pad("isospectral", 13) << pad("non-iso", 18) << pad("edges", 8) << "metric\n";
    for (const auto& p : report.pairs) {
      const auto label =
          report.members[p.first].partition.to_string() + " vs " + report.members[p.second].partition.to_string();
      const char* how = p.degree_lists_differ ? "yes (degrees)" : p.isomorphic == false ? "yes (search)" : "no";
      os << pad(label, 2 * part_width + 6) << pad(format_deviation(p.deviation_standard), 14)
         << pad(format_deviation(p.deviation_signless), 14)
         << pad(p.isospectral_standard && p.isospectral_signless ? "both" : p.isospectral_standard ? "standard"
                                                                      : p.isospectral_signless      ? "signless"
                                                                                                    : "no",
                13)
         << pad(how, 18) << pad(p.equal_edge_count ? "equal" : "differ", 8) << (p.metric_isospectral ? "yes" : "no")
         << "\n";
    }
  }
  os << "\nisospectral (both signs): " << (report.all_isospectral() ? "yes" : "no")
     << "\nnon-isomorphic: " << (report.all_non_isomorphic() ? "yes" : "no")
     << "\nmetric-isospectral: " << (report.all_metric_isospectral() ? "yes" : "no") << "\n";
  return os.str();
}

std::vector<LambdaEntry> harvest_lambda(const Spectrum& aux, int shift, const std::vector<double>& exclude, double tol) {
  std::vector<LambdaEntry> out;
  for (const auto& c : clusters(aux, tol)) {
    if (c.multiplicity <= shift) continue;
    const bool excluded = std::any_of(exclude.begin(), exclude.end(),
                                      [&](double x) { return std::fabs(x - c.value) <= kDisjointGap; });
    if (excluded) continue;
    LambdaEntry e{c.value, c.multiplicity, {}};
    if (auto label = exact_label(c.value)) e.symbol = *label;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LambdaEntry> subdivided_k5_constants() {
  const std::vector<std::string> symbols{
      "1-0.5*sqrt((9+sqrt(21))/5)", "1-sqrt(2/5)", "1-0.5*sqrt((9-sqrt(21))/5)", "1",
      "1+0.5*sqrt((9-sqrt(21))/5)", "1+sqrt(2/5)", "1+0.5*sqrt((9+sqrt(21))/5)",
  };
  std::vector<LambdaEntry> out;
  for (const auto& s : symbols) out.push_back({evaluate_expression(s), 0, s});
  return out;
}

BracketingCertificate certificate_for(const FamilySpec& member, LaplacianSign sign) {
  const int r = member.params.r;
  const int p = member.params.p;
  const int s = member.partition.length();
  check_partition(r, member.partition);
  if (s < 2) throw Error(ErrorKind::InvalidRange, "a bracketing certificate needs s >= 2 blocks");

  BracketingCertificate c;
  c.target_source = member.to_string();
  c.order = build_member(member).order();
  c.sign = sign;

  const FamilySpec unmerged{member.kind, member.params, all_ones(r)};
  BracketingArm upper{unmerged.to_string(), build_member(unmerged), 0, r - s, {}};

  // Every leaf block merged into one: K_{r+1}, K_{p+1,r} or their subdivisions.
  std::string lower_source = is_bipartite_family(member.kind)
                                 ? "complete-bipartite:p=" + std::to_string(p + 1) + ",q=" + std::to_string(r)
                                 : "complete:n=" + std::to_string(r + 1);
  SimpleGraph lower_graph = is_bipartite_family(member.kind) ? complete_bipartite_graph(p + 1, r) : complete_graph(r + 1);
  if (is_subdivided(member.kind)) {
    lower_source = "subdiv:" + lower_source;
    lower_graph = subdivide_all(lower_graph);
  }
  BracketingArm lower{lower_source, lower_graph, s - 1, 0, {}};

  if (member.kind == FamilyKind::FuzzyBall) {
    const double sf = sign == LaplacianSign::Standard ? 1.0 : -1.0;
    const auto pair = decorated_complete_pair(r, sign);
    const std::string centre = std::to_string(2 * r + static_cast<int>(sf));
    const std::string root = "sqrt(" + std::to_string(4 * r + 1) + ")";
    const std::string den = std::to_string(2 * r);
    upper.lambda = {{pair[0], r - 1, "(" + centre + "-" + root + ")/" + den},
                    {pair[1], r - 1, "(" + centre + "+" + root + ")/" + den}};
    lower.lambda = {{1.0 + sf / r, r, std::string(sf > 0 ? "1+1/" : "1-1/") + std::to_string(r)}};
    c.known = {sign == LaplacianSign::Standard ? 0.0 : 2.0};
  } else if (member.kind == FamilyKind::FuzzyBipartite) {
    // A leaf on an r-side vertex couples to it alone: (1 - lambda)^2 = 1/(p+1)
    // for every vector summing to zero over the r side.
    const std::string root = "sqrt(" + std::to_string(p + 1) + ")";
    const double offset = 1.0 / std::sqrt(static_cast<double>(p + 1));
    upper.lambda = {{1.0 - offset, r - 1, "1-1/" + root}, {1.0 + offset, r - 1, "1+1/" + root}};
    lower.lambda = {{1.0, p + r - 1, "1"}};
    c.known = {0.0, 2.0};
  } else {
    // Subdivided kinds are bipartite: 0 and 2 are simple eigenvalues.
    c.known = {0.0, 2.0};
    lower.lambda = harvest_lambda(spectrum(lower.aux, sign), lower.total_shift(), c.known);
    std::vector<double> taken = c.known;
    for (const auto& e : lower.lambda) taken.push_back(e.value);
    upper.lambda = harvest_lambda(spectrum(upper.aux, sign), upper.total_shift(), taken);
    c.notes.push_back("spectral sets harvested from numeric auxiliary spectra");

    if (member.kind == FamilyKind::SubdividedFuzzyBall && r == 5) {
      const auto constants = subdivided_k5_constants();
      for (auto* arm : {&upper, &lower}) {
        for (auto& e : arm->lambda) {
          for (const auto& k : constants) {
            if (std::fabs(k.value - e.value) <= kClusterTol) {
              e.value = k.value;
              e.symbol = k.symbol;
            }
          }
        }
      }
      c.notes.back() += "; exact surds substituted for r=5";
    }
  }
  c.arms = {std::move(upper), std::move(lower)};
  return c;
}

}  // namespace isospec
