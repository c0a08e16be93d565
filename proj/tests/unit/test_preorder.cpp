#include <doctest.h>

#include <random>

#include "isospec/error.hpp"
#include "isospec/families.hpp"
#include "isospec/preorder.hpp"
#include "isospec/standard_graphs.hpp"
#include "random_graphs.hpp"

using namespace isospec;

namespace {

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an isospec::Error");
  return ErrorKind::Io;
}

Partition parts(std::vector<int> p) { return Partition::from_parts(std::move(p)); }

}  // namespace

TEST_CASE("spectrally_less") {
  const Spectrum a({0.0, 0.5, 1.0});
  const Spectrum b({0.0, 1.0, 1.5});
  CHECK(spectrally_less(a, b, 0).holds);
  const auto reverse = spectrally_less(b, a, 0);
  CHECK_FALSE(reverse.holds);
  REQUIRE(reverse.first_violation.has_value());
  CHECK(*reverse.first_violation == 2);
  CHECK(spectrally_less(b, a, 1).holds);  // lambda_k(b) <= lambda_{k+1}(a)

  // Order condition |G| >= |G'| - t.
  const Spectrum small({0.0});
  const auto check = spectrally_less(small, b, 0);
  CHECK_FALSE(check.order_condition);
  CHECK_FALSE(check.holds);
  CHECK(spectrally_less(small, b, 2).holds);

  // One-sided tolerance: round-off on equal values is not a violation.
  CHECK(spectrally_less(Spectrum({1.0 + 1e-12}), Spectrum({1.0}), 0).holds);
  CHECK_FALSE(spectrally_less(Spectrum({1.0 + 1e-6}), Spectrum({1.0}), 0).holds);
  CHECK(kind_of([&] { spectrally_less(a, b, -1); }) == ErrorKind::InvalidRange);
}

TEST_CASE("contraction bracketing holds for random merges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testgen::random_connected_graph(rng, 5 + trial % 8, 0.4);
    const auto merge = testgen::random_valid_merge(rng, g);
    if (!merge) continue;
    const auto& m = *merge;
    CHECK(keeps_every_edge(g, m));
    for (auto sign : {LaplacianSign::Standard, LaplacianSign::Signless}) {
      const auto b = verify_contraction_bracketing(g, m, sign);
      CHECK(b.shift == shrinking_number(m));
      CHECK(b.quotient.order() == m.block_count());
      CHECK(b.lower.holds);
      CHECK(b.upper.holds);
    }
  }
}

TEST_CASE("a merge that collapses parallel edges can break the bracketing") {
  // 0 and 1 share the neighbours 2 and 3, so the quotient loses two edges.
  const std::vector<Edge> edges{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}};
  const auto g = SimpleGraph::build(5, edges);
  const auto m = VertexMerge::from_blocks(5, {{0, 1}, {2}, {3}, {4}});
  CHECK_FALSE(keeps_every_edge(g, m));
  const auto b = verify_contraction_bracketing(g, m, LaplacianSign::Standard);
  CHECK(b.quotient.edge_count() == 4);
  CHECK(b.lower.holds);
  CHECK_FALSE(b.upper.holds);
}

TEST_CASE("surviving multiplicity") {
  CHECK(surviving_multiplicity(5, 3, 0) == 2);
  CHECK(surviving_multiplicity(6, 1, 0) == 5);
  CHECK(kind_of([] { surviving_multiplicity(3, 2, 1); }) == ErrorKind::NoSurvival);
  CHECK(kind_of([] { surviving_multiplicity(3, -1, 0); }) == ErrorKind::InvalidRange);
}

TEST_CASE("interlacing diagram for the decorated K_6 arm") {
  const auto aux = spectrum(decorated_complete(6), LaplacianSign::Standard);
  const auto target = spectrum(fuzzy_ball(6, parts({2, 2, 2})), LaplacianSign::Standard);
  const auto d = render_diagram(aux, target, 0, 3);
  std::vector<std::size_t> columns;
  for (const auto& [k, v] : d.pins) columns.push_back(k);
  CHECK(columns == std::vector<std::size_t>{2, 3, 8, 9});
  CHECK(d.pins[0].second == doctest::Approx(2.0 / 3.0));
  CHECK(d.pins[3].second == doctest::Approx(1.5));

  // Same diagram through the three-row form.
  const auto d3 = render_diagram(aux, target, aux, 3);
  CHECK(d3.t_lower == 0);
  CHECK(d3.t_upper == 3);
  CHECK(d3.pinned_values() == d.pinned_values());

  const auto text = diagram_text(d, "K^6", "K^6(A)");
  CHECK(text.find("[2/3]") != std::string::npos);
  CHECK(text.find("[3/2]") != std::string::npos);
  const auto j = diagram_json(d);
  CHECK(j.at("t") == 3);
  CHECK(j.at("pinned").size() == 4);
  CHECK(j.at("rows").size() == 3);
}

TEST_CASE("interlacing diagram for the K_7 arm") {
  const auto aux = spectrum(complete_graph(7), LaplacianSign::Standard);
  const auto target = spectrum(fuzzy_ball(6, parts({2, 2, 2})), LaplacianSign::Standard);
  const auto d = render_diagram(aux, target, aux, 2);
  CHECK(d.t_lower == 2);
  CHECK(d.t_upper == 0);
  std::vector<std::size_t> columns;
  for (const auto& [k, v] : d.pins) {
    columns.push_back(k);
    CHECK(v == doctest::Approx(7.0 / 6.0));
  }
  CHECK(columns == std::vector<std::size_t>{4, 5, 6, 7});
}

TEST_CASE("diagram length checks") {
  const Spectrum a({0, 1, 1, 2});
  const Spectrum b({0, 2});
  CHECK(kind_of([&] { render_diagram(a, b, 0, 1); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] { render_diagram(a, b, a, 1); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] { render_diagram(a, b, Spectrum({0, 1, 2, 2}), 2); }) == ErrorKind::LengthMismatch);
  CHECK_NOTHROW(render_diagram(a, b, a, 2));
}
