// Fourier-Stieltjes transform of the Bernoulli convolution measure as a
// certified truncation of the infinite cosine product
//
//     F(t) = prod_{k>=1} cos(2 pi lambda^k t),   0 < lambda < 1,
//
// in the e^{2 pi i t x} frequency convention (so F(t - s) is the inner
// product of the exponentials e_s, e_t in L^2 of the measure).

#pragma once

#include <span>
#include <vector>

namespace cantor {

/// Contraction ratio of the iterated function system; the spectral modules
/// fix it at 1/4, this module keeps it generic.
struct ScaleRatio {
    double lambda;
    explicit ScaleRatio(double l);
};

inline const ScaleRatio kQuarter{0.25};

struct TransformValue {
    double t;           // frequency, in cycles
    double value;       // truncated product, |value| <= 1
    int depth;          // number of factors taken
    double tail_bound;  // certified absolute error of the omitted tail
};

/// Minimal depth K such that the certified tail bound is <= tol.
/// The bound: once 2*pi*|t|*lambda^{K+1}/(1-lambda) <= 1/2, the omitted
/// factors satisfy |1 - cos u| <= u^2/2 and the tail perturbs the product
/// by at most sum_{k>K} (2*pi*|t|*lambda^k)^2 / 2, a geometric sum.
int truncation_depth(double t, ScaleRatio lambda, double tol);

/// Tail bound of the K-factor truncation (the geometric majorant above).
double tail_bound_at(double t, ScaleRatio lambda, int depth);

/// Evaluate F(t) to certified absolute accuracy tol. Deterministic: same
/// inputs give bit-identical output. Factors are multiplied from k = K down
/// to k = 1. Exact zeros (an integer t whose 4-adic reduction is odd, for
/// lambda = 1/4, or a factor that evaluates to floating zero) short-circuit
/// to value 0 with tail_bound 0.
TransformValue mu_hat(double t, ScaleRatio lambda, double tol);

/// Convenience: value only, lambda = 1/4.
double mu_hat_value(double t, double tol = 1e-12);

/// |F(4t) - cos(2 pi t) F(t)| at lambda = 1/4; identically zero in exact
/// arithmetic, and <= 2 tol as computed.
double functional_eq_residual(double t, double tol = 1e-12);

/// Batch evaluation, parallel over frequencies (outputs are per-frequency
/// independent).
std::vector<TransformValue> mu_hat_batch(std::span<const double> ts, ScaleRatio lambda,
                                         double tol);

}  // namespace cantor
