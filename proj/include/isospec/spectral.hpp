#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "isospec/graph.hpp"

namespace isospec {

/// Default comparison tolerance for whole spectra.
inline constexpr double kCompareTol = 1e-9;
/// Default tolerance for grouping eigenvalues into multiplicity clusters.
inline constexpr double kClusterTol = 1e-8;
/// Default minimum separation for two eigenvalue sets to count as disjoint.
inline constexpr double kDisjointGap = 1e-6;

enum class LaplacianSign { Standard, Signless };

std::string_view to_string(LaplacianSign sign) noexcept;
/// Accepts "standard" and "signless"; throws Error(Parse) otherwise.
LaplacianSign parse_sign(std::string_view text);

/// Dense symmetric matrix in full row-major storage. set() writes both
/// triangles, so the matrix is symmetric at all times.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dimension);

  int dimension() const noexcept { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value);

  std::span<double> row(int i) { return {data_.data() + index(i, 0), static_cast<std::size_t>(n_)}; }
  std::span<const double> row(int i) const { return {data_.data() + index(i, 0), static_cast<std::size_t>(n_)}; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> data_;
};

/// Matrix of the (signless) standard Laplacian in the degree-normalised
/// basis: 1 on the diagonal, -+1/sqrt(deg u deg v) on edges.
SymmetricMatrix laplacian_matrix(const SimpleGraph& g, LaplacianSign sign);

/// Ascending eigenvalue list with multiset semantics.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values.
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double trace() const noexcept;

 private:
  std::vector<double> values_;
};

struct JacobiOptions {
  /// Sweeps stop once the off-diagonal Frobenius norm drops below
  /// threshold_factor * n.
  double threshold_factor = 1e-13;
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigenvalues, ascending. Throws ConvergenceFailure when the
/// sweep cap is hit.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const JacobiOptions& options = {});

Spectrum spectrum(const SimpleGraph& g, LaplacianSign sign);

/// K_r: 1 +- 1/(r-1) with multiplicity r-1 plus the simple 0 (standard) or
/// 2 (signless).
Spectrum spectrum_complete(int r, LaplacianSign sign);

/// K_r with a pendant edge at every vertex. Only the two values of
/// multiplicity r-1 are known in closed form; the remaining two eigenvalues
/// come from the eigensolver and are listed in numeric_values.
struct DecoratedCompleteSpectrum {
  Spectrum spectrum;
  std::vector<double> closed_form_values;  // the two multiplicity r-1 values
  std::vector<double> numeric_values;      // the two eigensolver values
};
DecoratedCompleteSpectrum spectrum_decorated_complete(int r, LaplacianSign sign);

/// The two eigenvalues of multiplicity r-1 of the decorated complete graph.
std::vector<double> decorated_complete_pair(int r, LaplacianSign sign);

/// Closed-form spectrum of the fuzzy ball with an s-partition of r
/// (r >= 4, 2 <= s <= r-1), independent of the partition itself.
Spectrum spectrum_fuzzy_ball(int r, int s, LaplacianSign sign);

/// K_{p,q}: (0, 1^(p+q-2), 2) for both signs.
Spectrum spectrum_complete_bipartite(int p, int q, LaplacianSign sign);

struct Cluster {
  double value = 0.0;  // mean of the members
  int multiplicity = 0;
};

/// Groups the sorted values into runs split at gaps larger than tol.
std::vector<Cluster> clusters(const Spectrum& s, double tol = kClusterTol);

/// Number of eigenvalues within tol of lam. Throws AmbiguousCluster when
/// the neighbourhood of lam has gaps or distances in (tol/4, 4 tol), i.e.
/// when the count would depend on the exact tolerance.
int multiplicity_of(const Spectrum& s, double lam, double tol = kClusterTol);

/// max_k |a_k - b_k|; throws LengthMismatch for different lengths.
double max_deviation(const Spectrum& a, const Spectrum& b);
/// Same length and max_deviation <= tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = kCompareTol);

/// Multiset of reals in [0,2] used as the spectral subsets of a bracketing.
class EigenvalueSet {
 public:
  EigenvalueSet() = default;
  explicit EigenvalueSet(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

 private:
  std::vector<double> values_;
};

/// True iff every pair (a_i, b_j) is more than gap apart.
bool sets_disjoint(const EigenvalueSet& a, const EigenvalueSet& b, double gap = kDisjointGap);

}  // namespace isospec
