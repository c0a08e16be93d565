#include <doctest.h>

#include <cmath>
#include <random>

#include "isospec/error.hpp"
#include "isospec/number_format.hpp"
#include "isospec/spectral.hpp"
#include "isospec/spectrum_io.hpp"
#include "isospec/standard_graphs.hpp"
#include "oracle.hpp"
#include "random_graphs.hpp"

using namespace isospec;

namespace {

constexpr LaplacianSign kSigns[] = {LaplacianSign::Standard, LaplacianSign::Signless};

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

SimpleGraph decorated(int r) {
  std::vector<Vertex> anchors(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) anchors[static_cast<std::size_t>(i)] = i;
  return with_pendants(complete_graph(r), anchors);
}

}  // namespace

TEST_CASE("Laplacian matrix entries") {
  const auto g = complete_bipartite_graph(1, 2);  // path 1-0-2
  const auto l = laplacian_matrix(g, LaplacianSign::Standard);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(l(1, 0) == l(0, 1));
  CHECK(l(1, 2) == 0.0);
  const auto q = laplacian_matrix(g, LaplacianSign::Signless);
  CHECK(q(0, 2) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("small spectra") {
  const auto k2 = spectrum(complete_graph(2), LaplacianSign::Standard);
  REQUIRE(k2.size() == 2);
  CHECK(k2[0] == doctest::Approx(0.0));
  CHECK(k2[1] == doctest::Approx(2.0));

  const auto k7 = spectrum(complete_graph(7), LaplacianSign::Standard);
  CHECK(std::fabs(k7[0]) < 1e-12);
  for (std::size_t k = 1; k < 7; ++k) CHECK(k7[k] == doctest::Approx(7.0 / 6.0).epsilon(1e-12));
  CHECK(k7.trace() == doctest::Approx(7.0));
}

TEST_CASE("closed forms of K_r and the decorated K_r") {
  for (int r = 3; r <= 12; ++r) {
    CAPTURE(r);
    for (auto sign : kSigns) {
      CHECK(spectra_equal(spectrum(complete_graph(r), sign), spectrum_complete(r, sign), 1e-10));
      const auto numeric = spectrum(decorated(r), sign);
      for (double v : decorated_complete_pair(r, sign)) CHECK(multiplicity_of(numeric, v) == r - 1);
      const auto split = spectrum_decorated_complete(r, sign);
      CHECK(split.numeric_values.size() == 2);
      CHECK(spectra_equal(split.spectrum, numeric, 1e-10));
    }
  }
  // Standard sign: the two values without closed form are 0 and (r+1)/r.
  const auto split = spectrum_decorated_complete(6, LaplacianSign::Standard);
  CHECK(split.numeric_values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(split.numeric_values[1] == doctest::Approx(7.0 / 6.0));
}

TEST_CASE("fuzzy ball spectrum formula") {
  const auto s = spectrum_fuzzy_ball(6, 3, LaplacianSign::Standard);
  const std::vector<double> expected{0, 2. / 3, 2. / 3, 7. / 6, 7. / 6, 7. / 6, 7. / 6, 1.5, 1.5};
  CHECK(spectra_equal(s, Spectrum(expected), 1e-12));
  CHECK(kind_of([] { spectrum_fuzzy_ball(3, 2, LaplacianSign::Standard); }) == ErrorKind::InvalidRange);
  CHECK(kind_of([] { spectrum_fuzzy_ball(6, 6, LaplacianSign::Standard); }) == ErrorKind::InvalidRange);
  CHECK(kind_of([] { spectrum_fuzzy_ball(6, 1, LaplacianSign::Standard); }) == ErrorKind::InvalidRange);
}

TEST_CASE("complete bipartite spectrum") {
  for (auto sign : kSigns) {
    CHECK(spectra_equal(spectrum(complete_bipartite_graph(3, 5), sign), spectrum_complete_bipartite(3, 5, sign), 1e-10));
  }
}

TEST_CASE("clusters and multiplicities") {
  const Spectrum s({0.0, 0.5, 0.5 + 1e-12, 1.0, 1.0, 1.0, 2.0});
  const auto c = clusters(s);
  REQUIRE(c.size() == 4);
  CHECK(c[1].multiplicity == 2);
  CHECK(c[2].value == doctest::Approx(1.0));
  CHECK(c[2].multiplicity == 3);
  CHECK(multiplicity_of(s, 1.0) == 3);
  CHECK(multiplicity_of(s, 1.5) == 0);
  // A value 2e-8 away sits in the ambiguous band.
  CHECK(kind_of([&] { multiplicity_of(Spectrum({1.0, 1.0 + 2e-8}), 1.0); }) == ErrorKind::AmbiguousCluster);
}

TEST_CASE("deviation, sets and validation") {
  CHECK(max_deviation(Spectrum({0, 1}), Spectrum({0, 1.5})) == doctest::Approx(0.5));
  CHECK(kind_of([] { max_deviation(Spectrum({0}), Spectrum({0, 1})); }) == ErrorKind::LengthMismatch);
  CHECK_FALSE(spectra_equal(Spectrum({0}), Spectrum({0, 1})));

  CHECK(sets_disjoint(EigenvalueSet({0.5, 1.5}), EigenvalueSet({1.0})));
  CHECK_FALSE(sets_disjoint(EigenvalueSet({0.5, 1.0}), EigenvalueSet({1.0 + 1e-9})));
  CHECK(kind_of([] { EigenvalueSet({2.5}); }) == ErrorKind::InvalidRange);
}

TEST_CASE("Jacobi reports non-convergence") {
  SymmetricMatrix m(3);
  m.set(0, 1, 0.5);
  m.set(1, 2, 0.25);
  JacobiOptions options;
  options.max_sweeps = 0;
  CHECK(kind_of([&] { symmetric_eigenvalues(m, options); }) == ErrorKind::ConvergenceFailure);
}

TEST_CASE("Jacobi agrees with the Householder/Sturm oracle on random graphs") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(2, 15);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testgen::random_connected_graph(rng, order(rng), 0.4);
    for (auto sign : kSigns) {
      const auto mine = spectrum(g, sign);
      const Spectrum reference(oracle::laplacian_eigenvalues(g, sign));
      worst = std::max(worst, max_deviation(mine, reference));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("spectral invariants on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testgen::random_connected_graph(rng, 3 + trial % 10, 0.4);
    const auto standard = spectrum(g, LaplacianSign::Standard);
    const auto signless = spectrum(g, LaplacianSign::Signless);
    CHECK(standard.trace() == doctest::Approx(g.order()).epsilon(1e-10));
    CHECK(standard[0] > -1e-9);
    CHECK(standard[standard.size() - 1] < 2 + 1e-9);
    CHECK(multiplicity_of(standard, 0.0) == 1);  // connected
    // Signless spectrum is the reflection of the standard one.
    for (std::size_t k = 0; k < standard.size(); ++k) {
      CHECK(signless[k] == doctest::Approx(2.0 - standard[standard.size() - 1 - k]).epsilon(1e-10));
    }
    if (is_bipartite(g)) CHECK(spectra_equal(standard, signless, 1e-10));
  }
}

TEST_CASE("number formatting") {
  CHECK(canonical_real(1e-16) == 0.0);
  CHECK(canonical_real(-3e-15) == 0.0);
  CHECK(format_real(7.0 / 6.0) == "1.16666666666667");
  CHECK(exact_label(7.0 / 6.0) == std::optional<std::string>("7/6"));
  CHECK(exact_label(2.0) == std::optional<std::string>("2"));
  CHECK(exact_label(-0.5) == std::optional<std::string>("-1/2"));
  CHECK_FALSE(exact_label(std::sqrt(2.0)).has_value());
  CHECK(display_value(std::sqrt(2.0)) == "1.41421");
  CHECK(format_deviation(1.5e-10) == "1.50e-10");
}

TEST_CASE("spectrum records") {
  const auto s = spectrum(complete_graph(4), LaplacianSign::Signless);
  const auto j = spectrum_record(s, LaplacianSign::Signless);
  CHECK(j.at("order") == 4);
  CHECK(j.at("sign") == "signless");
  CHECK(j.at("trace").get<double>() == doctest::Approx(4.0));
  const auto back = parse_spectrum_record(j);
  CHECK(back.sign == LaplacianSign::Signless);
  CHECK(spectra_equal(back.spectrum, s, 1e-13));
  CHECK(kind_of([] { parse_spectrum_record(nlohmann::json{{"order", 2}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_sign("negative"); }) == ErrorKind::Parse);
}
