// Eigenvalues of small complex Hermitian matrices by cyclic Jacobi sweeps.
// Deterministic (fixed sweep order), adequate for the Toeplitz moment
// matrices and Krylov Gramians used here (dimension <= a few hundred).

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cantor {

/// Ascending eigenvalues of the Hermitian matrix A (row-major n x n).
/// Throws std::invalid_argument if A is not Hermitian to within herm_tol.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> A,
                                          std::size_t n, double herm_tol = 1e-9);

}  // namespace cantor
