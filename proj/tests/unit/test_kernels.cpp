#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/kernels.hpp"
#include "isospec/spectral.hpp"
#include "isospec/standard_graphs.hpp"

using namespace isospec;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels") {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{4, -5, 6};
  CHECK(kernels::scalar::dot(x.data(), y.data(), 3) == doctest::Approx(12.0));
  CHECK(kernels::scalar::max_abs_diff(x.data(), y.data(), 3) == doctest::Approx(7.0));
  CHECK(kernels::scalar::max_abs_diff(x.data(), y.data(), 0) == 0.0);

  std::vector<double> a{1, 0};
  std::vector<double> b{0, 1};
  kernels::scalar::rotate(a.data(), b.data(), 2, 0.0, 1.0);  // quarter turn
  CHECK(a[0] == doctest::Approx(0.0));
  CHECK(a[1] == doctest::Approx(-1.0));
  CHECK(b[0] == doctest::Approx(1.0));
  CHECK(b[1] == doctest::Approx(0.0));
}

TEST_CASE("span API checks lengths") {
  const std::vector<double> x(3, 1.0);
  const std::vector<double> y(4, 1.0);
  CHECK_THROWS_AS(kernels::dot(x, y), Error);
  CHECK_THROWS_AS(kernels::max_abs_diff(x, y), Error);
  std::vector<double> a(3);
  std::vector<double> b(2);
  CHECK_THROWS_AS(kernels::rotate(a, b, 1.0, 0.0), Error);
}

TEST_CASE("ISA selection") {
  CHECK(kernels::isa_supported(kernels::Isa::Scalar));
  CHECK(kernels::isa_supported(kernels::detect_isa()));
  CHECK(kernels::to_string(kernels::Isa::Avx2) == "avx2");
  IsaGuard guard;
  kernels::set_active_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  if (!kernels::isa_supported(kernels::Isa::Avx2)) {
    CHECK_THROWS_AS(kernels::set_active_isa(kernels::Isa::Avx2), Error);
  }
}

#if defined(ISOSPEC_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!kernels::isa_supported(kernels::Isa::Avx2)) {
    MESSAGE("CPU without AVX2/FMA, skipping");
    return;
  }
  std::mt19937_64 rng(42);
  // Lengths around the vector width exercise every tail size.
  for (std::size_t n = 0; n <= 67; ++n) {
    CAPTURE(n);
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);

    double magnitude = 0.0;
    for (std::size_t i = 0; i < n; ++i) magnitude += std::fabs(x[i] * y[i]);
    CHECK(std::fabs(kernels::avx2::dot(x.data(), y.data(), n) - kernels::scalar::dot(x.data(), y.data(), n)) <=
          1e-14 * (magnitude + 1.0));

    CHECK(kernels::avx2::max_abs_diff(x.data(), y.data(), n) == kernels::scalar::max_abs_diff(x.data(), y.data(), n));

    auto xs = x;
    auto ys = y;
    auto xv = x;
    auto yv = y;
    kernels::scalar::rotate(xs.data(), ys.data(), n, 0.6, 0.8);
    kernels::avx2::rotate(xv.data(), yv.data(), n, 0.6, 0.8);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(xv[i] == doctest::Approx(xs[i]).epsilon(1e-14));
      CHECK(yv[i] == doctest::Approx(ys[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("spectra do not depend on the active ISA") {
  if (!kernels::isa_supported(kernels::Isa::Avx2)) return;
  IsaGuard guard;
  const auto g = complete_bipartite_graph(4, 7);
  kernels::set_active_isa(kernels::Isa::Scalar);
  const auto scalar = spectrum(g, LaplacianSign::Standard);
  kernels::set_active_isa(kernels::Isa::Avx2);
  const auto simd = spectrum(g, LaplacianSign::Standard);
  CHECK(max_deviation(scalar, simd) < 1e-12);
}
#endif
