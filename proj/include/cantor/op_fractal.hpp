// Finite truncations of the scaling unitary U (e_gamma -> e_{5 gamma}), its
// adjoint, and the two Cuntz isometries S0 (e_gamma -> e_{4 gamma}) and
// S1 (e_gamma -> e_{4 gamma + 1}). U's matrix is the Galerkin compression
// onto span{e_gamma : gamma in S}; mass leaving S is reported as leakage,
// never renormalized. Relations that are exact only on a closed sub-index
// (S0 isometry, U S0 commutation) are evaluated on the maximal such
// sub-index, whose size is reported alongside.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "cantor/basis.hpp"
#include "cantor/gamma.hpp"
#include "cantor/matrix.hpp"

namespace cantor {

enum class OpKind { U5, U5Adjoint, S0, S1, S0Adjoint, S1Adjoint, Product };

struct TruncatedOperator {
    GammaSet index_set;
    Matrix entries;  // entries[xi][gamma], all real for the operators here
    OpKind kind = OpKind::Product;
};

struct LeakageReport {
    double input_norm2;
    double output_norm2;
    double leakage;  // input - output; >= -1e-9
};

/// entries[xi][gamma] = F(5 gamma - xi); column gamma is the expansion of
/// e_{5 gamma} over S. Requires scale-1 index sets.
TruncatedOperator build_U(const GammaSet& S, double tol);

/// Kronecker-delta matrices delta_{xi, 4 gamma + which}; exact integers.
TruncatedOperator build_S(const GammaSet& S, int which);

TruncatedOperator adjoint(const TruncatedOperator& op);

std::pair<CoeffVector, LeakageReport> apply(const TruncatedOperator& op,
                                            const CoeffVector& v);

struct RegressionRecord {
    double coeff_e5_of_U3e1;  // sum_gamma F(25 - gamma) F(5 gamma - 5)
    double coeff_e5_of_e125;  // F(120)
    std::size_t terms;
};

/// The non-iterability computation: the e_5 coefficient of U^3 e_1 versus
/// that of e_125, with 2^m Gamma terms (m = 9 matches the 512-term run).
RegressionRecord iterate_regression(int m = 9, double tol = 1e-12);

/// ||U e_gamma - lambda e_gamma||^2 computed from the truncated expansion;
/// analytically equal to 2 for every gamma in Gamma\{0} and unimodular
/// lambda. gamma = 0 (the fixed point) is rejected.
double eigen_residual(std::int64_t gamma, std::complex<double> lambda_phase,
                      double tol = 1e-12);

struct CommutatorNorms {
    double us0_minus_s0u;  // Frobenius, on the closed column sub-index
    double us1_minus_s1u;
    std::size_t closed0;   // size of {gamma in S : 4 gamma in S}
    std::size_t closed1;   // size of {gamma in S : 4 gamma + 1 in S}
};

CommutatorNorms commutator_norms(const GammaSet& S, double tol = 1e-12);

struct SpatialObstruction {
    double const_coeff_e10;   // F(10), nonzero
    double const_coeff_Ue2;   // F(5) * sum_gamma F(2 - gamma) = 0 exactly
};

/// The multiplicativity failure that rules out a point transformation
/// implementing U: compare the constant coefficients of e_10 = U(e_1 e_1)
/// and of U(e_2).
SpatialObstruction spatial_obstruction(int m = 9, double tol = 1e-12);

}  // namespace cantor
