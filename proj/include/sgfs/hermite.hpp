#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "sgfs/multi_index.hpp"

namespace sgfs {

/// psi_k(y): probabilists' Hermite polynomial of degree k, normalized so
/// that int psi_i psi_j rho dy = delta_ij with rho = exp(-y^2/2)/sqrt(2 pi).
/// Evaluated with the normalized three-term recurrence
///   psi_{k+1} = (y psi_k - sqrt(k) psi_{k-1}) / sqrt(k+1).
inline double hermite(int k, double y) {
  if (k < 0) throw std::invalid_argument("hermite: degree must be >= 0");
  double prev = 0.0;   // psi_{k-1}
  double curr = 1.0;   // psi_0
  for (int j = 0; j < k; ++j) {
    const double next = (y * curr - std::sqrt(static_cast<double>(j)) * prev) /
                        std::sqrt(static_cast<double>(j + 1));
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Tensor-product basis polynomial psi_idx(y) = prod_n psi_{idx_n}(y_n).
inline double multivariate_psi(const MultiIndex& idx, std::span<const double> y) {
  if (idx.dim() != static_cast<int>(y.size()))
    throw std::invalid_argument("multivariate_psi: dimension mismatch");
  double value = 1.0;
  for (int n = 0; n < idx.dim(); ++n) value *= hermite(idx[n], y[static_cast<std::size_t>(n)]);
  return value;
}

}  // namespace sgfs
