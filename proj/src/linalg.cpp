#include "symdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

void multiply(const std::vector<double>& a, std::size_t n, const std::vector<double>& x,
              std::vector<double>& y) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = a.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double residual_of(const std::vector<double>& a, std::size_t n, const std::vector<double>& x,
                   double value) {
  std::vector<double> ax(n);
  multiply(a, n, x, ax);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(ax[i] - value * x[i]));
  return r / std::max(1.0, value);
}

}  // namespace

PerronPair perron_right(const std::vector<double>& matrix, std::size_t n, double tolerance,
                        std::size_t max_iterations) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty matrix");
  if (matrix.size() != n * n) throw Error(ErrorKind::invalid_argument, "matrix size mismatch");

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  PerronPair out;
  double best = std::numeric_limits<double>::infinity();
  std::size_t stale = 0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    multiply(matrix, n, x, y);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];  // (A + I) x
      norm += y[i];
    }
    if (!(norm > 0.0)) throw Error(ErrorKind::internal, "power iteration collapsed");
    for (std::size_t i = 0; i < n; ++i) y[i] /= norm;
    x.swap(y);
    out.iterations = it;
    if (it % 16 != 0) continue;
    // x is normalized, so ||(A+I)x||_1 = rho(A) + 1 at convergence.
    const double r = residual_of(matrix, n, x, norm - 1.0);
    if (r <= tolerance * 1e-2) break;
    if (r < best * 0.5) {
      best = r;
      stale = 0;
    } else if (r <= tolerance && ++stale >= 8) {
      break;  // rounding floor reached
    }
  }
  // Rayleigh-type refinement: value from the converged vector.
  std::vector<double> ax(n);
  multiply(matrix, n, x, ax);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += ax[i];
    den += x[i];
  }
  out.value = num / den;
  out.vector = std::move(x);
  out.residual = residual_of(matrix, n, out.vector, out.value);
  if (out.residual > tolerance)
    throw Error(ErrorKind::internal, "power iteration did not reach the residual tolerance");
  return out;
}

std::vector<double> transpose(const std::vector<double>& matrix, std::size_t n) {
  std::vector<double> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = matrix[i * n + j];
  return t;
}

std::vector<double> submatrix(const std::vector<double>& matrix, std::size_t n,
                              const std::vector<std::size_t>& indices) {
  const std::size_t k = indices.size();
  std::vector<double> out(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out[a * k + b] = matrix[indices[a] * n + indices[b]];
  return out;
}

}  // namespace symdyn
