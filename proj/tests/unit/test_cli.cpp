#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isospec/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = isospec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "isospec_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen writes an edge list") {
  const auto r = run({"gen", "fuzzy-ball:r=6,A=2+2+2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("9 21\n", 0) == 0);
  const auto k6 = run({"gen", "fuzzy-ball:r=6,A=1+1+1+1+1+1"});
  CHECK(k6.out.rfind("12 21\n", 0) == 0);

  const auto file = scratch_dir() / "k7.txt";
  CHECK(run({"gen", "complete:n=7", "-o", file.string()}).code == 0);
  const auto spectrum = run({"spectrum", file.string()});
  CHECK(spectrum.code == 0);
  CHECK(contains(spectrum.out, "7/6"));
}

TEST_CASE("gen names the bad token") {
  const auto r = run({"gen", "fuzzy-ball:r=6,A=2+2+3"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "2+2+3"));
  CHECK(run({"gen", "fuzzy-ball:r=six,A=2+2+2"}).code == 2);
  CHECK(run({"gen", "/no/such/file"}).code == 2);
}

TEST_CASE("spectrum") {
  const auto k2 = run({"spectrum", "complete:n=2"});
  CHECK(k2.code == 0);
  CHECK(contains(k2.out, "1\t0\n"));
  CHECK(contains(k2.out, "2\t2\n"));

  const auto j = run({"spectrum", "fuzzy-ball:r=4,A=1+3", "--sign", "signless", "--json"});
  REQUIRE(j.code == 0);
  const auto record = nlohmann::json::parse(j.out);
  CHECK(record.at("sign") == "signless");
  CHECK(record.at("order") == 6);
  // Closed form with the signless sign: 1-1/4 three times.
  int count = 0;
  for (double v : record.at("eigenvalues")) count += std::fabs(v - 0.75) < 1e-9;
  CHECK(count == 3);
  CHECK(run({"spectrum", "complete:n=3", "--sign", "negative"}).code == 2);
}

TEST_CASE("verify-pair") {
  const auto yes = run({"verify-pair", "fuzzy-ball:r=6,A=2+2+2", "fuzzy-ball:r=6,A=1+2+3"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "isospectral (standard): yes"));
  CHECK(contains(yes.out, "isospectral (signless): yes"));
  CHECK(contains(yes.out, "non-isomorphic (degree lists differ)"));
  CHECK(contains(yes.out, "metric-isospectral: yes"));

  CHECK(run({"verify-pair", "complete:n=2", "complete:n=3"}).code == 4);
  CHECK(run({"verify-pair", "complete:n=4", "complete-bipartite:p=1,q=3"}).code == 1);

  const auto sub = run({"verify-pair", "subdiv:fuzzy-ball:r=5,A=2+3", "subdiv:fuzzy-ball:r=5,A=1+4", "--json"});
  CHECK(sub.code == 0);
  const auto j = nlohmann::json::parse(sub.out);
  CHECK(j.at("degree_lists_differ") == true);
  CHECK(j.at("signs").at("standard").at("isospectral") == true);

  const auto one_sign = run({"verify-pair", "complete:n=4", "complete:n=4", "--sign", "signless", "--json"});
  CHECK(one_sign.code == 0);
  const auto js = nlohmann::json::parse(one_sign.out);
  CHECK_FALSE(js.at("signs").contains("standard"));
  CHECK(js.at("isomorphic") == true);
}

TEST_CASE("family and bracket round trip") {
  const auto cert = run({"family", "fuzzy-ball:r=6,A=2+2+2", "--certificate"});
  REQUIRE(cert.code == 0);
  const auto path = write_file("ball.json", cert.out);

  const auto predict = run({"bracket", path.string(), "--predict"});
  CHECK(predict.code == 0);
  CHECK(contains(predict.out, "3/2"));
  CHECK(contains(predict.out, "cross-check against eigensolver: max deviation"));

  const auto validate = run({"bracket", path.string(), "--validate"});
  CHECK(validate.code == 0);
  CHECK(contains(validate.out, "certificate VALID"));
  CHECK(contains(validate.out, "[7/6]"));

  const auto trusted = run({"bracket", path.string(), "--validate", "--trust-contraction", "--json"});
  CHECK(trusted.code == 0);
  CHECK(nlohmann::json::parse(trusted.out).at("conditions").at("relations").at("checked") == false);

  const auto bip = run({"family", "fuzzy-bipartite:p=2,r=5,A=4+1", "--certificate"});
  const auto bip_path = write_file("bip.json", bip.out);
  const auto bip_predict = run({"bracket", bip_path.string(), "--predict", "--json"});
  CHECK(bip_predict.code == 0);
  CHECK(nlohmann::json::parse(bip_predict.out).at("cross_check").at("agrees") == true);

  CHECK(run({"bracket", path.string()}).code == 2);
  CHECK(run({"bracket", path.string(), "--predict", "--validate"}).code == 2);
  CHECK(run({"bracket", "/no/such/cert.json", "--predict"}).code == 2);
}

TEST_CASE("corrupted certificate fails validation with exit 5") {
  auto cert = nlohmann::json::parse(run({"family", "fuzzy-ball:r=6,A=2+2+2", "--certificate"}).out);
  cert["arms"][1]["lambda"].push_back({{"value", "3/2"}, {"mult", 6}});
  const auto path = write_file("corrupt.json", cert.dump());
  const auto r = run({"bracket", path.string(), "--validate"});
  CHECK(r.code == 5);
  CHECK(contains(r.out, "condition (3) disjoint sets: FAIL"));
  CHECK(contains(r.out, "certificate INVALID"));

  auto short_cert = nlohmann::json::parse(run({"family", "fuzzy-ball:r=6,A=2+2+2", "--certificate"}).out);
  short_cert["order"] = 12;
  const auto short_path = write_file("short.json", short_cert.dump());
  CHECK(run({"bracket", short_path.string(), "--predict"}).code == 5);

  const auto garbage = write_file("garbage.json", "{not json");
  CHECK(run({"bracket", garbage.string(), "--validate"}).code == 2);
}

TEST_CASE("certificate paths resolve next to the certificate") {
  const auto dir = scratch_dir() / "relative";
  fs::create_directories(dir);
  CHECK(run({"gen", "fuzzy-ball:r=6,A=2+2+2", "-o", (dir / "target.txt").string()}).code == 0);
  CHECK(run({"gen", "complete:n=7", "-o", (dir / "k7.txt").string()}).code == 0);
  auto cert = nlohmann::json::parse(run({"family", "fuzzy-ball:r=6,A=2+2+2", "--certificate"}).out);
  cert["target"] = "target.txt";
  cert["arms"][1]["aux"] = "k7.txt";
  std::ofstream(dir / "cert.json") << cert.dump();
  CHECK(run({"bracket", (dir / "cert.json").string(), "--validate"}).code == 0);
}

TEST_CASE("family experiment") {
  const auto r = run({"family", "fuzzy-ball:r=6,s=3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "isospectral (both signs): yes"));
  const auto j = run({"family", "fuzzy-ball:r=6", "--s", "3", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).at("s") == 3);
  CHECK(run({"family", "fuzzy-ball:r=6"}).code == 2);
  const auto with_s = run({"family", "fuzzy-ball:r=6,A=2+2+2", "--json"});
  CHECK(with_s.code == 0);
  CHECK(nlohmann::json::parse(with_s.out).at("members").size() == 3);
  const auto all = run({"family", "subdiv:fuzzy-ball:r=5,s=2", "--certificate"});
  CHECK(all.code == 0);
  CHECK(nlohmann::json::parse(all.out).size() == 2);
  CHECK(run({"family", "fuzzy-ball:r=3,s=2"}).code == 2);
  CHECK(run({"family", "complete:n=4"}).code == 2);
}

TEST_CASE("partitions and export-dot") {
  const auto p = run({"partitions", "6", "3"});
  CHECK(p.code == 0);
  CHECK(p.out == "1+1+4\n1+2+3\n2+2+2\n");
  CHECK(run({"partitions", "6", "3", "--json"}).out == "[[1,1,4],[1,2,3],[2,2,2]]\n");
  CHECK(run({"partitions", "3", "4"}).code == 2);

  const auto dot = run({"export-dot", "complete:n=3"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "0 -- 1;"));
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"family", "fuzzy-bipartite:p=2,r=5,s=2", "--json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("ISOSPEC_TOL and --tol") {
  // Two graphs whose spectra differ: only a huge tolerance calls them equal.
  const std::vector<std::string> args{"verify-pair", "complete:n=4", "complete-bipartite:p=1,q=3"};
  CHECK(run(args).code == 1);
  auto loose = args;
  loose.insert(loose.end(), {"--tol", "3"});
  CHECK(run(loose).code == 0);
  ::setenv("ISOSPEC_TOL", "3", 1);
  CHECK(run(args).code == 0);
  ::setenv("ISOSPEC_TOL", "bogus", 1);
  CHECK(run(args).code == 2);
  ::unsetenv("ISOSPEC_TOL");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"spectrum"}).code == 2);
}
