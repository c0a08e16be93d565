#include "isospec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "isospec/error.hpp"
#include "isospec/kernels.hpp"
#include "isospec/standard_graphs.hpp"

namespace isospec {

std::string_view to_string(LaplacianSign sign) noexcept {
  return sign == LaplacianSign::Standard ? "standard" : "signless";
}

LaplacianSign parse_sign(std::string_view text) {
  if (text == "standard") return LaplacianSign::Standard;
  if (text == "signless") return LaplacianSign::Signless;
  throw Error(ErrorKind::Parse, "unknown Laplacian sign '" + std::string(text) + "'");
}

SymmetricMatrix::SymmetricMatrix(int dimension)
    : n_(dimension), data_(static_cast<std::size_t>(dimension) * dimension, 0.0) {
  if (dimension < 0) throw Error(ErrorKind::InvalidRange, "negative matrix dimension");
}

void SymmetricMatrix::set(int i, int j, double value) {
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

SymmetricMatrix laplacian_matrix(const SimpleGraph& g, LaplacianSign sign) {
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m.set(v, v, 1.0);
  const double s = sign == LaplacianSign::Standard ? -1.0 : 1.0;
  for (const Edge& e : g.edges()) {
    m.set(e.u, e.v, s / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v)));
  }
  return m;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::trace() const noexcept { return std::accumulate(values_.begin(), values_.end(), 0.0); }

namespace {

// Frobenius norm of the strictly off-diagonal part, from the upper triangle.
double off_diagonal_norm(const SymmetricMatrix& a) {
  const int n = a.dimension();
  double sum = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    auto tail = a.row(i).subspan(i + 1);
    sum += kernels::dot(tail, tail);
  }
  return std::sqrt(2.0 * sum);
}

void jacobi_rotate(SymmetricMatrix& a, int p, int q) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  // Smaller root of t^2 + 2 theta t - 1 = 0, written to avoid overflow.
  double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  kernels::rotate(a.row(p), a.row(q), c, s);

  auto row_p = a.row(p);
  auto row_q = a.row(q);
  row_p[p] = app - t * apq;
  row_q[q] = aqq + t * apq;
  row_p[q] = 0.0;
  row_q[p] = 0.0;
  // Mirror the updated rows into columns p and q.
  const int n = a.dimension();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    a.row(k)[p] = row_p[k];
    a.row(k)[q] = row_q[k];
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const JacobiOptions& options) {
  const int n = a.dimension();
  const double threshold = options.threshold_factor * std::max(n, 1);
  int sweeps = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweeps == options.max_sweeps) {
      throw Error(ErrorKind::ConvergenceFailure,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps (n=" +
                      std::to_string(n) + ")");
    }
    for (int p = 0; p + 1 < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) jacobi_rotate(a, p, q);
      }
    }
    ++sweeps;
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum spectrum(const SimpleGraph& g, LaplacianSign sign) {
  return Spectrum(symmetric_eigenvalues(laplacian_matrix(g, sign)));
}

namespace {

double sign_factor(LaplacianSign sign) { return sign == LaplacianSign::Standard ? 1.0 : -1.0; }
double constant_eigenvalue(LaplacianSign sign) { return sign == LaplacianSign::Standard ? 0.0 : 2.0; }

void append(std::vector<double>& out, double value, int count) { out.insert(out.end(), count, value); }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidRange, message);
}

}  // namespace

Spectrum spectrum_complete(int r, LaplacianSign sign) {
  require(r >= 2, "complete graph needs r >= 2");
  std::vector<double> values{constant_eigenvalue(sign)};
  append(values, 1.0 + sign_factor(sign) / (r - 1), r - 1);
  return Spectrum(std::move(values));
}

std::vector<double> decorated_complete_pair(int r, LaplacianSign sign) {
  require(r >= 2, "decorated complete graph needs r >= 2");
  const double root = std::sqrt(4.0 * r + 1.0);
  const double centre = 2.0 * r + sign_factor(sign);
  return {(centre - root) / (2.0 * r), (centre + root) / (2.0 * r)};
}

DecoratedCompleteSpectrum spectrum_decorated_complete(int r, LaplacianSign sign) {
  auto pair = decorated_complete_pair(r, sign);
  std::vector<Vertex> anchors(r);
  std::iota(anchors.begin(), anchors.end(), 0);
  const Spectrum numeric = spectrum(with_pendants(complete_graph(r), anchors), sign);

  // Remove r-1 copies of each closed-form value from the numeric spectrum;
  // what is left are the two eigenvalues without a closed form.
  std::vector<double> rest(numeric.values().begin(), numeric.values().end());
  for (double target : pair) {
    for (int copy = 0; copy < r - 1; ++copy) {
      auto nearest = std::min_element(rest.begin(), rest.end(), [target](double a, double b) {
        return std::fabs(a - target) < std::fabs(b - target);
      });
      rest.erase(nearest);
    }
  }
  std::vector<double> values;
  append(values, pair[0], r - 1);
  append(values, pair[1], r - 1);
  values.insert(values.end(), rest.begin(), rest.end());
  return {Spectrum(std::move(values)), pair, rest};
}

Spectrum spectrum_fuzzy_ball(int r, int s, LaplacianSign sign) {
  require(r >= 4 && s >= 2 && s <= r - 1, "fuzzy ball spectrum needs r >= 4 and 2 <= s <= r-1, got r=" +
                                                std::to_string(r) + " s=" + std::to_string(s));
  auto pair = decorated_complete_pair(r, sign);
  std::vector<double> values{constant_eigenvalue(sign)};
  append(values, pair[0], s - 1);
  append(values, pair[1], s - 1);
  append(values, 1.0 + sign_factor(sign) / r, r - s + 1);
  return Spectrum(std::move(values));
}

Spectrum spectrum_complete_bipartite(int p, int q, LaplacianSign /*sign*/) {
  require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
  std::vector<double> values{0.0, 2.0};
  append(values, 1.0, p + q - 2);
  return Spectrum(std::move(values));
}

std::vector<Cluster> clusters(const Spectrum& s, double tol) {
  std::vector<Cluster> out;
  double sum = 0.0;
  const auto values = s.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k] - values[k - 1] > tol) {
      if (!out.empty()) out.back().value = sum / out.back().multiplicity;
      out.push_back({values[k], 0});
      sum = 0.0;
    }
    sum += values[k];
    ++out.back().multiplicity;
  }
  if (!out.empty()) out.back().value = sum / out.back().multiplicity;
  return out;
}

int multiplicity_of(const Spectrum& s, double lam, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidRange, "multiplicity tolerance must be positive");
  const double lo_band = tol / 4.0;
  const double hi_band = 4.0 * tol;
  const auto values = s.values();
  auto ambiguous = [&](const std::string& what) {
    throw Error(ErrorKind::AmbiguousCluster, what + " near " + std::to_string(lam) + " at tol " + std::to_string(tol));
  };
  int count = 0;
  std::size_t prev = values.size();
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double d = std::fabs(values[k] - lam);
    if (d > hi_band) continue;
    if (d > tol && d < hi_band) ambiguous("eigenvalue at distance " + std::to_string(d));
    if (prev != values.size()) {
      const double gap = values[k] - values[prev];
      if (gap > lo_band && gap < hi_band) ambiguous("cluster gap " + std::to_string(gap));
    }
    prev = k;
    if (d <= tol) ++count;
  }
  return count;
}

double max_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "spectra of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  return kernels::max_abs_diff(a.values(), b.values());
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  return a.size() == b.size() && max_deviation(a, b) <= tol;
}

EigenvalueSet::EigenvalueSet(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= -kCompareTol && v <= 2.0 + kCompareTol)) {
      throw Error(ErrorKind::InvalidRange, "eigenvalue " + std::to_string(v) + " outside [0,2]");
    }
  }
  std::sort(values_.begin(), values_.end());
}

bool sets_disjoint(const EigenvalueSet& a, const EigenvalueSet& b, double gap) {
  for (double x : a.values()) {
    for (double y : b.values()) {
      if (std::fabs(x - y) <= gap) return false;
    }
  }
  return true;
}

}  // namespace isospec
