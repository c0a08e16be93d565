#include "isospec/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "isospec/bracketing.hpp"
#include "isospec/families.hpp"
#include "isospec/graph_io.hpp"
#include "isospec/number_format.hpp"
#include "isospec/partition.hpp"
#include "isospec/spectrum_io.hpp"

namespace isospec::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::AmbiguousCluster:
    case ErrorKind::TooLarge:
      return kNumeric;
    case ErrorKind::LengthMismatch:
      return kMismatch;
    case ErrorKind::NoSurvival:
    case ErrorKind::CountMismatch:
    case ErrorKind::NegativeFill:
    case ErrorKind::Unrecoverable:
      return kCertificate;
    default:
      return kParse;
  }
}

namespace {

struct Options {
  std::string graph;
  std::string second;
  std::string output;
  std::string sign = "standard";
  std::string pair_sign = "both";
  bool json = false;
  bool predict = false;
  bool validate = false;
  bool trust = false;
  bool certificate = false;
  std::optional<int> s;
  int r = 0;
  int parts = 0;
};

double default_tol() {
  const char* env = std::getenv("ISOSPEC_TOL");
  if (env == nullptr || *env == '\0') return kCompareTol;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) {
    throw Error(ErrorKind::Parse, std::string("ISOSPEC_TOL='") + env + "' is not a positive number");
  }
  return value;
}

// Writes to the file named by path, or to out when path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

std::string spectrum_lines(const Spectrum& s, double tol) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::string value = format_real(s[k]);
    os << k + 1 << "\t" << value;
    if (auto label = exact_label(s[k], tol); label && *label != value) os << "\t" << *label;
    os << "\n";
  }
  return os.str();
}

int cmd_gen(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_graph(o.graph);
  emit(o.output, out, [&](std::ostream& os) { write_edge_list(os, g); });
  return kOk;
}

int cmd_spectrum(const Options& o, double tol, std::ostream& out) {
  const SimpleGraph g = load_graph(o.graph);
  const LaplacianSign sign = parse_sign(o.sign);
  const Spectrum s = spectrum(g, sign);
  if (o.json) {
    out << spectrum_record(s, sign).dump(2) << "\n";
    return kOk;
  }
  out << "# " << o.graph << "  order " << g.order() << "  sign " << to_string(sign) << "\n"
      << spectrum_lines(s, tol) << "trace\t" << format_real(s.trace()) << "\n";
  return kOk;
}

std::string degree_text(const DegreeList& d) {
  std::string out;
  for (int v : d.degrees) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

int cmd_verify_pair(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const SimpleGraph a = load_graph(o.graph);
  const SimpleGraph b = load_graph(o.second);
  std::vector<LaplacianSign> signs;
  if (o.pair_sign == "both") {
    signs = {LaplacianSign::Standard, LaplacianSign::Signless};
  } else {
    signs = {parse_sign(o.pair_sign)};
  }
  if (a.order() != b.order()) {
    if (o.json) {
      out << nlohmann::json{{"order_mismatch", {a.order(), b.order()}}}.dump(2) << "\n";
    }
    err << "order mismatch: " << a.order() << " vs " << b.order() << "\n";
    return kMismatch;
  }

  nlohmann::json per_sign = nlohmann::json::object();
  std::ostringstream text;
  bool all_iso = true;
  bool standard_iso = false;
  for (LaplacianSign sign : {LaplacianSign::Standard, LaplacianSign::Signless}) {
    const bool requested = std::find(signs.begin(), signs.end(), sign) != signs.end();
    if (!requested && sign == LaplacianSign::Signless) continue;
    const double dev = max_deviation(spectrum(a, sign), spectrum(b, sign));
    const bool iso = dev <= tol;
    if (sign == LaplacianSign::Standard) standard_iso = iso;
    if (!requested) continue;
    all_iso = all_iso && iso;
    per_sign[std::string(to_string(sign))] = {{"isospectral", iso}, {"max_deviation", canonical_real(dev)}};
    text << "isospectral (" << to_string(sign) << "): " << (iso ? "yes" : "no") << "  max deviation "
         << format_deviation(dev) << "\n";
  }

  const DegreeList da = degree_list(a);
  const DegreeList db = degree_list(b);
  const bool degrees_differ = !(da == db);
  std::optional<bool> isomorphic;
  if (!degrees_differ && a.order() <= kDefaultIsomorphismCap) isomorphic = are_isomorphic_small(a, b);
  const std::string verdict = degrees_differ            ? "non-isomorphic (degree lists differ)"
                              : isomorphic == false     ? "non-isomorphic (exhaustive search)"
                              : isomorphic == true      ? "isomorphic"
                                                        : "undecided (same degree list, too large to search)";
  const bool equal_edges = a.edge_count() == b.edge_count();
  const bool metric = standard_iso && equal_edges;

  if (o.json) {
    nlohmann::json j{
        {"order", a.order()},
        {"signs", per_sign},
        {"degree_lists", {da.degrees, db.degrees}},
        {"degree_lists_differ", degrees_differ},
        {"isomorphic", isomorphic ? nlohmann::json(*isomorphic) : nlohmann::json(nullptr)},
        {"non_isomorphic", degrees_differ || isomorphic == false},
        {"edges", {a.edge_count(), b.edge_count()}},
        {"metric_isospectral", metric},
    };
    out << j.dump(2) << "\n";
  } else {
    out << text.str() << "degree list 1: " << degree_text(da) << "\n"
        << "degree list 2: " << degree_text(db) << "\n"
        << "isomorphism: " << verdict << "\n"
        << "edges: " << a.edge_count() << " vs " << b.edge_count() << "\n"
        << "metric-isospectral: " << (metric ? "yes" : "no") << "\n";
  }
  return all_iso ? kOk : kNegative;
}

GraphResolver resolver_near(const std::filesystem::path& base) {
  return [base](const std::string& source) {
    if (source.find(':') != std::string::npos) return load_graph(source);
    std::filesystem::path p(source);
    if (p.is_relative()) p = base / p;
    return read_edge_list_file(p);
  };
}

int cmd_bracket(const Options& o, double tol, std::ostream& out) {
  std::ifstream file(o.graph);
  if (!file) throw Error(ErrorKind::Io, "cannot open certificate '" + o.graph + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "certificate '" + o.graph + "': " + e.what());
  }
  const auto resolve = resolver_near(std::filesystem::path(o.graph).parent_path());
  const BracketingCertificate c = parse_certificate(j, resolve);
  std::optional<SimpleGraph> target;
  if (!c.target_source.empty() && !(o.validate && o.trust)) target = resolve(c.target_source);

  if (o.predict) {
    const Spectrum predicted = determine_spectrum(c, tol);
    std::optional<double> deviation;
    if (target && target->order() == static_cast<int>(predicted.size())) {
      deviation = max_deviation(predicted, spectrum(*target, c.sign));
    }
    const bool agrees = !target || (deviation && *deviation <= std::max(tol, kClusterTol));
    if (o.json) {
      nlohmann::json report{{"predicted", spectrum_record(predicted, c.sign)}};
      if (target) {
        report["cross_check"] = {{"target", c.target_source},
                                 {"max_deviation", deviation ? nlohmann::json(canonical_real(*deviation))
                                                             : nlohmann::json(nullptr)},
                                 {"agrees", agrees}};
      }
      out << report.dump(2) << "\n";
    } else {
      out << "# predicted spectrum of " << (c.target_source.empty() ? "target" : c.target_source) << " ("
          << to_string(c.sign) << ")\n"
          << spectrum_lines(predicted, tol);
      if (target) {
        out << "cross-check against eigensolver: "
            << (deviation ? "max deviation " + format_deviation(*deviation) : std::string("order differs")) << "\n";
      }
    }
    return agrees ? kOk : kCertificate;
  }

  ValidationOptions options;
  options.preorder_tol = tol;
  ValidationReport report;
  std::optional<Spectrum> target_spectrum;
  if (target) {
    report = validate_certificate(c, *target, c.sign, options);
    target_spectrum = spectrum(*target, c.sign);
  } else {
    report = validate_certificate_trusting_relations(c, c.sign, options);
  }
  if (o.json) {
    out << validation_json(report).dump(2) << "\n";
  } else {
    out << validation_text(c, report, target_spectrum);
  }
  return report.passed() ? kOk : kCertificate;
}

int cmd_family(const Options& o, double tol, std::ostream& out) {
  const ParsedSpec parsed = parse_graph_spec(o.graph);
  if (!parsed.family_kind) throw Error(ErrorKind::Parse, "'" + o.graph + "' is not a family string");
  const FamilyKind kind = *parsed.family_kind;
  std::optional<int> s = o.s ? o.s : parsed.s;
  if (!s && parsed.member) s = parsed.member->partition.length();
  if (!s) throw Error(ErrorKind::Parse, "'" + o.graph + "' needs A= or s= (or --s)");

  if (o.certificate) {
    const LaplacianSign sign = parse_sign(o.sign);
    if (parsed.member && !o.s) {
      out << certificate_json(certificate_for(*parsed.member, sign)).dump(2) << "\n";
      return kOk;
    }
    nlohmann::json all = nlohmann::json::array();
    for (const auto& a : enumerate_partitions(parsed.params.r, *s)) {
      all.push_back(certificate_json(certificate_for({kind, parsed.params, a}, sign)));
    }
    out << all.dump(2) << "\n";
    return kOk;
  }

  const FamilyReport report = run_family_experiment(kind, parsed.params, *s, tol);
  if (o.json) {
    out << family_report_json(report).dump(2) << "\n";
  } else {
    out << family_report_text(report);
  }
  return report.all_isospectral() && report.all_non_isomorphic() ? kOk : kNegative;
}

int cmd_partitions(const Options& o, std::ostream& out) {
  const auto all = enumerate_partitions(o.r, o.parts);
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : all) j.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
    out << j.dump() << "\n";
  } else {
    for (const auto& p : all) out << p.to_string() << "\n";
  }
  return kOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_graph(o.graph);
  emit(o.output, out, [&](std::ostream& os) { write_dot(os, g, o.graph); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral graph families for the normalised Laplacians", "isospec"};
  app.require_subcommand(1);
  Options o;
  double tol_flag = 0.0;

  auto* gen = app.add_subcommand("gen", "Write the edge list of a graph string");
  gen->add_option("spec", o.graph, "graph string, e.g. fuzzy-ball:r=6,A=2+2+2")->required();
  gen->add_option("-o,--output", o.output, "output file (default stdout)");

  auto add_tol = [&](CLI::App* sub) {
    return sub->add_option("--tol", tol_flag, "comparison tolerance (default 1e-9 or $ISOSPEC_TOL)")
        ->check(CLI::PositiveNumber);
  };

  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of a graph");
  spec->add_option("graph", o.graph, "edge-list file or graph string")->required();
  spec->add_option("--sign", o.sign, "standard or signless")->check(CLI::IsMember({"standard", "signless"}));
  auto* spec_tol = add_tol(spec);
  spec->add_flag("--json", o.json, "JSON output");

  auto* pair = app.add_subcommand("verify-pair", "Compare the spectra of two graphs");
  pair->add_option("first", o.graph, "first graph")->required();
  pair->add_option("second", o.second, "second graph")->required();
  pair->add_option("--sign", o.pair_sign, "both, standard or signless")
      ->check(CLI::IsMember({"both", "standard", "signless"}));
  auto* pair_tol = add_tol(pair);
  pair->add_flag("--json", o.json, "JSON output");

  auto* bracket = app.add_subcommand("bracket", "Evaluate a bracketing certificate");
  bracket->add_option("certificate", o.graph, "certificate JSON file")->required();
  auto* predict = bracket->add_flag("--predict", o.predict, "print the spectrum the certificate determines");
  auto* validate = bracket->add_flag("--validate", o.validate, "check the certificate's four conditions");
  predict->excludes(validate);
  bracket->add_flag("--trust-contraction", o.trust, "take the bracketing relations on trust");
  auto* bracket_tol = add_tol(bracket);
  bracket->add_flag("--json", o.json, "JSON output");

  auto* family = app.add_subcommand("family", "Run a family experiment or emit certificates");
  family->add_option("spec", o.graph, "family string, e.g. fuzzy-ball:r=6,s=3")->required();
  family->add_option("--s", o.s, "number of parts");
  family->add_flag("--certificate", o.certificate, "emit bracketing certificates instead");
  family->add_option("--sign", o.sign, "sign for --certificate")->check(CLI::IsMember({"standard", "signless"}));
  auto* family_tol = add_tol(family);
  family->add_flag("--json", o.json, "JSON output");

  auto* parts = app.add_subcommand("partitions", "List the s-partitions of r");
  parts->add_option("r", o.r)->required();
  parts->add_option("s", o.parts)->required();
  parts->add_flag("--json", o.json, "JSON output");

  auto* dot = app.add_subcommand("export-dot", "Write a graph in DOT format");
  dot->add_option("graph", o.graph, "edge-list file or graph string")->required();
  dot->add_option("-o,--output", o.output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    double tol = default_tol();
    for (const auto* opt : {spec_tol, pair_tol, bracket_tol, family_tol}) {
      if (opt->count() > 0) tol = tol_flag;
    }
    if (gen->parsed()) return cmd_gen(o, out);
    if (spec->parsed()) return cmd_spectrum(o, tol, out);
    if (pair->parsed()) return cmd_verify_pair(o, tol, out, err);
    if (bracket->parsed()) {
      if (!o.predict && !o.validate) throw Error(ErrorKind::Parse, "bracket needs --predict or --validate");
      return cmd_bracket(o, tol, out);
    }
    if (family->parsed()) return cmd_family(o, tol, out);
    if (parts->parsed()) return cmd_partitions(o, out);
    return cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << "isospec: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace isospec::cli
