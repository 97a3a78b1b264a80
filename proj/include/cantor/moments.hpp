// Scalar spectral measures of the scaling unitary, accessed through their
// trigonometric moments c_k = <U^k v, v>. The projection-valued measure is
// never materialized: Cesaro means of the moments give the atom at z = 1,
// Fejer summation gives nonnegative density estimates, and the polynomial
// functional calculus gives the isometry / pushforward identity checks.
//
// Leakage accounting: every application of the truncated operator adds its
// norm loss to a running budget, reported with every result. Callers may
// bound the budget (leakage_cap); crossing it raises TruncationError. The
// default cap admits deep iterations, whose budget telescopes toward the
// full input mass while the low-order moments stay accurate.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "cantor/basis.hpp"
#include "cantor/op_fractal.hpp"

namespace cantor {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultLeakageCap = 2.0;

/// Laurent polynomial phi(z) = sum_{k=-N}^{N} c_k z^k on the unit circle.
struct LaurentPoly {
    int N = 0;
    CVec c;  // c[k + N] holds the coefficient of z^k

    static LaurentPoly one() { return {0, {std::complex<double>{1.0, 0.0}}}; }
    static LaurentPoly monomial(int k, std::complex<double> coeff = {1.0, 0.0});

    std::complex<double> coeff(int k) const {
        return (k < -N || k > N) ? std::complex<double>{0.0, 0.0}
                                 : c[static_cast<std::size_t>(k + N)];
    }
    std::complex<double> eval(std::complex<double> z) const;
};

struct MomentSequence {
    CoeffVector center;
    int K = 0;
    CVec c;  // c[k + K] = <U^k v, v>, k in [-K, K]
    std::vector<double> cum_leakage;  // budget accrued when c[k+K] was formed
    double leakage_budget = 0.0;

    std::complex<double> moment(int k) const { return c[static_cast<std::size_t>(k + K)]; }
};

/// Moments of order |k| <= K by successive truncated applications of U
/// (U* for negative k). Requires v supported in S with unit norm. The
/// negative-side values are computed independently and checked against
/// conj(c_k) to 1e-10.
MomentSequence moments(const CoeffVector& v, int K, const GammaSet& S, double tol,
                       double leakage_cap = kDefaultLeakageCap);

/// Same, over a prebuilt U truncation (avoids rebuilding the matrix).
MomentSequence moments(const CoeffVector& v, int K, const TruncatedOperator& U,
                       double leakage_cap = kDefaultLeakageCap,
                       bool require_unit = true);

/// Cesaro mean (1/(2K+1)) sum_k c_k -> m_v({1}); equals 1 iff U v = v.
double atom_at_one(const MomentSequence& ms);

/// Minimum eigenvalue of the (K+1)x(K+1) Toeplitz matrix [c_{i-j}]; for a
/// positive measure this is >= -(leakage_budget + rounding). Validates the
/// Hermitian moment symmetry first.
double herglotz_defect(const MomentSequence& ms);

/// | ||phi(U)v||^2 - sum_{a,b} conj(phi_a) phi_b c_{b-a}(v) |. When
/// budget_out is given it receives the total leakage accrued by both
/// evaluation routes, the scale against which the residual is judged.
double isometry_residual(const CoeffVector& v, const LaurentPoly& phi, const GammaSet& S,
                         double tol, double leakage_cap = kDefaultLeakageCap,
                         double* budget_out = nullptr);

/// | c_k(w) - sum_{a,b} conj(phi_a) phi_b c_{k+b-a}(v) | for w = phi(U)v;
/// the moment form of dm_w = |phi|^2 dm_v.
double pushforward_identity_residual(const CoeffVector& v, const LaurentPoly& phi, int k,
                                     const GammaSet& S, double tol,
                                     double leakage_cap = kDefaultLeakageCap,
                                     double* budget_out = nullptr);

struct MeasureEstimate {
    int K = 0;
    std::vector<double> grid;     // M equispaced angles in [0, 2 pi)
    std::vector<double> density;  // Fejer-smoothed, >= -1e-9, integrates to c_0
    double atom_at_1 = 0.0;
};

/// Fejer (order-K) density estimate on gridM points (default 8K).
MeasureEstimate fejer_density(const MomentSequence& ms, int gridM = 0);

struct RnProfilePoint {
    double theta;
    double sqrt_ratio;  // sqrt of the Fejer density ratio m_w / m_v
    double abs_phi;     // |phi(e^{i theta})| for comparison
};

/// Pointwise sqrt(dm_w/dm_v) profile for w = phi(U)v, where the v-density
/// exceeds the floor 1e-4. Diagnostic: no tolerance is asserted.
std::vector<RnProfilePoint> rn_sqrt_profile(const CoeffVector& v, const LaurentPoly& phi,
                                            int K, int gridM, double tol = 1e-12,
                                            double leakage_cap = kDefaultLeakageCap);

struct CesaroResult {
    std::complex<double> projection_coeff;  // <f, e_0>
    double residual_norm;                   // ||A_N f - <f,e_0> e_0||
    double leakage_budget;
};

/// A_N f = (1/(N+1)) sum_{k=0}^{N} U^k f on the truncation; the von Neumann
/// mean converges to the e_0 component.
CesaroResult cesaro_average(const CoeffVector& f, int N, const GammaSet& S, double tol,
                            double leakage_cap = kDefaultLeakageCap);

/// phi(U) v with leakage tracking (shared by the residual checks).
std::pair<CoeffVector, double> apply_laurent(const LaurentPoly& phi, const CoeffVector& v,
                                             const TruncatedOperator& U,
                                             double leakage_cap = kDefaultLeakageCap);

}  // namespace cantor
