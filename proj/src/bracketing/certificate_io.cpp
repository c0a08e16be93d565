#include <sstream>

#include "isospec/bracketing.hpp"
#include "isospec/error.hpp"
#include "isospec/expression.hpp"
#include "isospec/number_format.hpp"

namespace isospec {

namespace {

LambdaEntry parse_value(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0, {}};
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    return {evaluate_expression(text), 0, text};
  }
  throw Error(ErrorKind::Parse, "certificate value must be a number or an expression string, got " + v.dump());
}

nlohmann::json value_json(double value, const std::string& symbol) {
  if (!symbol.empty()) return symbol;
  return canonical_real(value);
}

int non_negative(const nlohmann::json& j, const char* key) {
  const int value = j.at(key).get<int>();
  if (value < 0) throw Error(ErrorKind::Parse, std::string("certificate field '") + key + "' must be >= 0");
  return value;
}

}  // namespace

BracketingCertificate parse_certificate(const nlohmann::json& j, const GraphResolver& resolve) {
  try {
    BracketingCertificate c;
    c.target_source = j.value("target", std::string());
    c.order = j.at("order").get<int>();
    if (c.order < 1) throw Error(ErrorKind::Parse, "certificate order must be positive");
    c.sign = parse_sign(j.value("sign", std::string("standard")));
    if (j.contains("known")) {
      for (const auto& v : j.at("known")) c.known.push_back(parse_value(v).value);
    }
    for (const auto& a : j.at("arms")) {
      const auto source = a.at("aux").get<std::string>();
      BracketingArm arm{source, resolve(source), non_negative(a, "t_lower"), non_negative(a, "t_upper"), {}};
      for (const auto& entry : a.at("lambda")) {
        LambdaEntry e = parse_value(entry.at("value"));
        e.multiplicity = entry.at("mult").get<int>();
        if (e.multiplicity < 1) throw Error(ErrorKind::Parse, "lambda multiplicity must be positive");
        arm.lambda.push_back(std::move(e));
      }
      c.arms.push_back(std::move(arm));
    }
    if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("certificate: ") + e.what());
  }
}

nlohmann::json certificate_json(const BracketingCertificate& c) {
  nlohmann::json known = nlohmann::json::array();
  for (double v : c.known) known.push_back(canonical_real(v));
  nlohmann::json arms = nlohmann::json::array();
  for (const auto& arm : c.arms) {
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& e : arm.lambda) lambda.push_back({{"value", value_json(e.value, e.symbol)}, {"mult", e.multiplicity}});
    arms.push_back({{"aux", arm.aux_source}, {"t_lower", arm.t_lower}, {"t_upper", arm.t_upper}, {"lambda", lambda}});
  }
  nlohmann::json out{
      {"target", c.target_source}, {"order", c.order}, {"sign", std::string(to_string(c.sign))},
      {"known", known},            {"arms", arms},
  };
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

std::string validation_text(const BracketingCertificate& c, const ValidationReport& report,
                            const std::optional<Spectrum>& target_spectrum) {
  std::ostringstream os;
  auto line = [&](int number, const char* name, const ConditionResult& r) {
    os << "condition (" << number << ") " << name << ": " << (!r.checked ? "TRUSTED" : r.passed ? "PASS" : "FAIL")
       << "  " << r.detail << "\n";
  };
  line(1, "bracketing relations", report.relations);
  line(2, "multiplicities", report.multiplicities);
  line(3, "disjoint sets", report.disjointness);
  line(4, "eigenvalue count", report.counting);
  if (target_spectrum) {
    for (std::size_t j = 0; j < c.arms.size(); ++j) {
      const auto& arm = c.arms[j];
      os << "\narm " << j + 1 << ": " << arm.aux_source << " (t_lower=" << arm.t_lower << ", t_upper=" << arm.t_upper
         << ")\n";
      try {
        const auto d = render_diagram(spectrum(arm.aux, c.sign), *target_spectrum, arm.t_lower, arm.t_upper);
        os << diagram_text(d, "aux" + std::to_string(j + 1), "G");
      } catch (const Error& e) {
        os << "  (no diagram: " << e.what() << ")\n";
      }
    }
  }
  os << "\ncertificate " << (report.passed() ? "VALID" : "INVALID") << "\n";
  return os.str();
}

nlohmann::json validation_json(const ValidationReport& report) {
  auto condition = [](const ConditionResult& r) {
    return nlohmann::json{{"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}};
  };
  nlohmann::json arms = nlohmann::json::array();
  for (const auto& a : report.arms) {
    nlohmann::json arm{{"problems", a.problems}};
    if (a.lower) arm["lower_holds"] = a.lower->holds;
    if (a.upper) arm["upper_holds"] = a.upper->holds;
    arms.push_back(std::move(arm));
  }
  return {
      {"passed", report.passed()},
      {"conditions",
       {{"relations", condition(report.relations)},
        {"multiplicities", condition(report.multiplicities)},
        {"disjointness", condition(report.disjointness)},
        {"counting", condition(report.counting)}}},
      {"arms", arms},
  };
}

}  // namespace isospec
