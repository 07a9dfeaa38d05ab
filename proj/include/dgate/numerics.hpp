#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace dgate {

using Vec = std::vector<double>;

/// Row-major dense matrix of 64-bit floats.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }

  bool operator==(const Matrix&) const = default;
};

/// Seedable generator whose output stream is identical on every platform.
/// mt19937_64 is pinned by the standard; the uniform/normal mappings are
/// written out explicitly because <random> distributions are not portable
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes exactly two uniform draws.
  double gauss();

  /// Uniform index in [0, n) by rejection sampling (no modulo bias).
  std::size_t index(std::size_t n);

  /// Fisher-Yates shuffle.
  void shuffle(std::vector<std::size_t>& v);

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with stream identifiers (splitmix64 finalizer), used to
/// derive independent per-job generator seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

// Serial reference kernels. The default kernels below parallelize with OpenMP
// but must agree with these (bit-exactly for elementwise/row-parallel ops,
// to rounding for blocked reductions).
namespace serial {
double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> v);
Vec matvec(const Matrix& m, const Vec& v);
Vec matvec_t(const Matrix& m, const Vec& v);
}  // namespace serial

// Reductions accumulate fixed-size blocks in index order, so results are
// independent of the OpenMP thread count.
double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> v);
double norm(std::span<const double> v);

Vec matvec(const Matrix& m, const Vec& v);

/// m^T v without forming the transpose.
Vec matvec_t(const Matrix& m, const Vec& v);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// Power-iteration estimate of sigma_max(m)^2. Monotone nondecreasing in
/// iters and never exceeds the true value; returns 0 for the zero matrix.
double spectral_norm_sq(const Matrix& m, int iters, Rng& rng);

/// Solves a*x = b for symmetric positive definite a (in-place Cholesky).
Vec solve_spd(Matrix a, Vec b);

/// Least-squares solution of x*beta ~= y via the normal equations.
Vec least_squares(const Matrix& x, const Vec& y);

}  // namespace dgate
