#pragma once

#include <vector>

#include "patmat/matrix.hpp"

namespace patmat {

// Eigenvalues of a symmetric matrix, sorted descending. Cyclic Jacobi;
// sweeps stop once the off-diagonal Frobenius mass drops below
// 1e-14 * ||m||_F. Throws std::invalid_argument if m is not square or
// deviates from symmetry by more than 1e-12.
std::vector<double> sym_eigenvalues(const FloatMatrix& m);

// Singular values, sorted descending, length min(rows, cols). Computed as
// square roots of the eigenvalues of the smaller Gram matrix.
std::vector<double> singular_values(const FloatMatrix& m);
std::vector<double> singular_values(const RationalMatrix& m);

inline double spectral_norm(const FloatMatrix& m) {
    auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

double trace_norm(const FloatMatrix& m);

// Count of singular values above 1e-6 * sigma_1.
std::size_t numerical_rank(const std::vector<double>& sv);

}  // namespace patmat
