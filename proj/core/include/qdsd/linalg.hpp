#pragma once

#include <vector>

#include "qdsd/complex_matrix.hpp"

namespace qdsd {

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// The input is checked against `hermiticity_tol` and symmetrized as
/// (m + m†)/2 before the decomposition, so the returned values are real by
/// construction. Uses a cyclic Jacobi sweep; dimensions here never exceed a
/// few hundred, where Jacobi is both simple and highly accurate.
///
/// Throws NotHermitianError if the symmetry check fails and
/// NoConvergenceError if the sweep cap is exhausted.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermiticity_tol = 1e-10);

/// Singular values sorted descending; count is min(rows, cols).
/// Computed as sqrt(max(0, lambda)) over the spectrum of m†m.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Kronecker product; out((i_a, i_b), (j_a, j_b)) = a(i_a, j_a) * b(i_b, j_b)
/// with the first factor's index major.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qdsd
