#pragma once

#include <cstddef>
#include <vector>

namespace symdyn {

struct PerronPair {
  double value = 0.0;
  std::vector<double> vector;  // positive, sums to 1
  double residual = 0.0;       // max_i |(Av)_i - value v_i| / max(1, value)
  std::size_t iterations = 0;
};

/// Perron eigenpair of a nonnegative irreducible n x n matrix (row-major) by
/// power iteration on A + I, which is primitive whenever A is irreducible.
PerronPair perron_right(const std::vector<double>& matrix, std::size_t n,
                        double tolerance = 1e-14, std::size_t max_iterations = 2'000'000);

std::vector<double> transpose(const std::vector<double>& matrix, std::size_t n);

/// Restriction of a square matrix to the given index set.
std::vector<double> submatrix(const std::vector<double>& matrix, std::size_t n,
                              const std::vector<std::size_t>& indices);

}  // namespace symdyn
