// Orthonormal-basis machinery over a Gamma truncation: expansion
// coefficients of an exponential e_t, Gram matrices, and Parseval partial
// sums. The Gram entries are F(t_i - t_j), so orthonormality of E(Gamma)
// shows up as an exact identity matrix.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cantor/gamma.hpp"
#include "cantor/matrix.hpp"
#include "cantor/transform.hpp"

namespace cantor {

struct CoeffVector {
    GammaSet index_set;
    CVec coeffs;   // one per element of index_set
    double norm2;  // sum |c|^2
};

/// Unit basis vector e_gamma over S; gamma must be an element of S.
CoeffVector basis_vector(const GammaSet& S, std::int64_t gamma);

/// Normalized complex combination sum_i w_i e_{gammas_i} over S.
CoeffVector combination(const GammaSet& S, std::span<const std::int64_t> gammas,
                        std::span<const std::complex<double>> weights);

/// Expansion of e_t over S: coeffs[gamma] = F(t - gamma).
CoeffVector expand(double t, const GammaSet& S, double tol);

/// G[i][j] = F(freqs[i] - freqs[j]); frequencies must be distinct.
Matrix gram_matrix(std::span<const double> freqs, double tol);

/// 1 - sum_{gamma in S} |F(t - gamma)|^2; nonnegative up to rounding and
/// nonincreasing as S grows.
double parseval_defect(double t, const GammaSet& S, double tol = 1e-12);

}  // namespace cantor
