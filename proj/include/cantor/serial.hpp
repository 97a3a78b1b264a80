// Plain single-threaded reference implementations of the parallel kernels,
// kept for correctness tests and the benchmark target. These use ordinary
// left-to-right accumulation, so agreement with the chunked-pairwise
// kernels is asserted to tolerance, not bitwise; thread-count independence
// of the parallel kernels themselves is asserted bitwise separately.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cantor/gamma.hpp"
#include "cantor/matrix.hpp"
#include "cantor/sampling.hpp"
#include "cantor/transform.hpp"

namespace cantor::serial {

std::vector<TransformValue> mu_hat_batch(std::span<const double> ts, ScaleRatio lambda,
                                         double tol);

Matrix gram_matrix(std::span<const double> freqs, double tol);

Matrix build_U_entries(const GammaSet& S, double tol);

Matrix matmul(const Matrix& A, const Matrix& B);

CVec matvec(const Matrix& A, const CVec& x);

double parseval_defect(double t, const GammaSet& S, double tol = 1e-12);

SampleBatch sample_batch(ScaleRatio lambda, int depth, std::size_t n, std::uint64_t seed);

std::complex<double> empirical_char(double t, const SampleBatch& batch);

}  // namespace cantor::serial
