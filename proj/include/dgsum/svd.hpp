#pragma once

#include <cstdint>
#include <vector>

#include "dgsum/matrix.hpp"

namespace dgsum {

/// One singular triplet: m * v = sigma * u with unit-norm u, v.
struct SvdTriplet {
  std::vector<double> u;
  double sigma = 0.0;
  std::vector<double> v;
};

/// Leading k singular triplets of m, sigma non-increasing, computed by
/// subspace iteration on m^T m with Gram-Schmidt re-orthonormalization and a
/// final Rayleigh-Ritz projection. Deterministic for a fixed seed. Each u is
/// sign-normalized so its largest-magnitude entry is positive.
///
/// Throws if k exceeds min(rows, cols) or if the iteration fails to meet the
/// residual bound 1e-8 * max(1, sigma_1) within the iteration cap (the
/// message reports the achieved residual).
std::vector<SvdTriplet> truncated_svd(const Matrix& m, int k, std::uint64_t seed);

/// Eigen-decomposition of a small symmetric matrix by cyclic Jacobi.
/// Eigenvalues descending; vectors are the columns of the returned matrix.
void jacobi_eigen_sym(const Matrix& h, std::vector<double>& values, Matrix& vectors);

}  // namespace dgsum
