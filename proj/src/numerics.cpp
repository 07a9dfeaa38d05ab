#include "dgate/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dgate {

namespace {

constexpr std::size_t kReduceBlock = 1024;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double Rng::gauss() {
  // (0,1] for the log argument, [0,1) for the angle.
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::index(std::size_t n) {
  require(n > 0, "Rng::index: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

void Rng::shuffle(std::vector<std::size_t>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[index(i)]);
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t s = mix(seed);
  s = mix(s ^ mix(a + 1));
  s = mix(s ^ mix(b + 2));
  s = mix(s ^ mix(c + 3));
  return s;
}

namespace serial {

double dot(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm_sq(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

Vec matvec(const Matrix& m, const Vec& v) {
  require(m.cols == v.size(), "matvec: dimension mismatch");
  Vec out(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    out[i] = dot({m.row(i), m.cols}, v);
  }
  return out;
}

Vec matvec_t(const Matrix& m, const Vec& v) {
  require(m.rows == v.size(), "matvec_t: dimension mismatch");
  Vec out(m.cols, 0.0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) acc += m(i, j) * v[i];
    out[j] = acc;
  }
  return out;
}

}  // namespace serial

double dot(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "dot: length mismatch");
  const std::size_t n = a.size();
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (nblocks < 2) return serial::dot(a, b);
  Vec partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(nblocks); ++bi) {
    const std::size_t lo = static_cast<std::size_t>(bi) * kReduceBlock;
    const std::size_t hi = std::min(lo + kReduceBlock, n);
    partial[bi] = serial::dot(a.subspan(lo, hi - lo), b.subspan(lo, hi - lo));
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

double norm_sq(std::span<const double> v) {
  const std::size_t n = v.size();
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (nblocks < 2) return serial::norm_sq(v);
  Vec partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(nblocks); ++bi) {
    const std::size_t lo = static_cast<std::size_t>(bi) * kReduceBlock;
    const std::size_t hi = std::min(lo + kReduceBlock, n);
    partial[bi] = serial::norm_sq(v.subspan(lo, hi - lo));
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

double norm(std::span<const double> v) { return std::sqrt(norm_sq(v)); }

Vec matvec(const Matrix& m, const Vec& v) {
  require(m.cols == v.size(), "matvec: dimension mismatch");
  Vec out(m.rows, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m.rows); ++i) {
    out[i] = serial::dot({m.row(i), m.cols}, v);
  }
  return out;
}

Vec matvec_t(const Matrix& m, const Vec& v) {
  require(m.rows == v.size(), "matvec_t: dimension mismatch");
  Vec out(m.cols, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(m.cols); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) acc += m(i, j) * v[i];
    out[j] = acc;
  }
  return out;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require(x.size() == y.size(), "axpy: length mismatch");
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.size()); ++i) {
    y[i] += alpha * x[i];
  }
}

double spectral_norm_sq(const Matrix& m, int iters, Rng& rng) {
  require(iters >= 1, "spectral_norm_sq: iters must be >= 1");
  Vec v(m.cols);
  for (double& x : v) x = rng.gauss();
  const double v0 = norm(v);
  if (v0 == 0.0) return 0.0;
  for (double& x : v) x /= v0;
  double estimate = 0.0;
  for (int k = 0; k < iters; ++k) {
    Vec mv = matvec(m, v);
    estimate = norm_sq(mv);  // Rayleigh quotient of unit v
    Vec u = matvec_t(m, mv);
    const double un = norm(u);
    if (un == 0.0) return 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / un;
  }
  return estimate;
}

Vec solve_spd(Matrix a, Vec b) {
  require(a.rows == a.cols, "solve_spd: matrix must be square");
  require(a.rows == b.size(), "solve_spd: dimension mismatch");
  const std::size_t n = a.rows;
  // Lower Cholesky factor in place.
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (d <= 0.0) throw std::invalid_argument("solve_spd: matrix not positive definite");
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / ljj;
    }
  }
  // Forward then backward substitution.
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a(i, k) * b[k];
    b[i] = s / a(i, i);
  }
  for (std::size_t ii = n; ii > 0; --ii) {
    const std::size_t i = ii - 1;
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a(k, i) * b[k];
    b[i] = s / a(i, i);
  }
  return b;
}

Vec least_squares(const Matrix& x, const Vec& y) {
  require(x.rows == y.size(), "least_squares: dimension mismatch");
  const std::size_t p = x.cols;
  Matrix xtx(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < x.rows; ++r) acc += x(r, i) * x(r, j);
      xtx(i, j) = acc;
      xtx(j, i) = acc;
    }
  }
  return solve_spd(std::move(xtx), matvec_t(x, y));
}

}  // namespace dgate
