#include "cantor/op_fractal.hpp"

#include <cmath>
#include <stdexcept>

#include "cantor/reduce.hpp"

namespace cantor {

namespace {

constexpr int kEigenDigits = 15;  // Parseval defect of 5*gamma <= 5.2e-8 here

double column_norm2_of_e5g(std::int64_t gamma, const GammaSet& S, double tol) {
    return chunked_sum<double>(S.size(), [&](std::size_t i) {
        const double c =
            mu_hat(static_cast<double>(5 * gamma - S.elements[i]), kQuarter, tol).value;
        return c * c;
    });
}

}  // namespace

TruncatedOperator build_U(const GammaSet& S, double tol) {
    if (S.scale != 1) throw std::invalid_argument("build_U: index set must have scale 1");
    const std::size_t n = S.size();
    TruncatedOperator op{S, Matrix(n), OpKind::U5};
#pragma omp parallel for schedule(static)
    for (long long g = 0; g < static_cast<long long>(n); ++g) {
        const std::size_t gg = static_cast<std::size_t>(g);
        const std::int64_t five_g = 5 * S.elements[gg];
        for (std::size_t xi = 0; xi < n; ++xi)
            op.entries.at(xi, gg) =
                mu_hat(static_cast<double>(five_g - S.elements[xi]), kQuarter, tol).value;
    }
    return op;
}

TruncatedOperator build_S(const GammaSet& S, int which) {
    if (which != 0 && which != 1) throw std::invalid_argument("build_S: which must be 0 or 1");
    const std::size_t n = S.size();
    TruncatedOperator op{S, Matrix(n), which == 0 ? OpKind::S0 : OpKind::S1};
    for (std::size_t g = 0; g < n; ++g) {
        const std::int64_t target = 4 * S.elements[g] + which;
        const std::int64_t xi = S.index_of(target);
        if (xi >= 0) op.entries.at(static_cast<std::size_t>(xi), g) = 1.0;
    }
    return op;
}

TruncatedOperator adjoint(const TruncatedOperator& op) {
    OpKind k = OpKind::Product;
    switch (op.kind) {
        case OpKind::U5: k = OpKind::U5Adjoint; break;
        case OpKind::U5Adjoint: k = OpKind::U5; break;
        case OpKind::S0: k = OpKind::S0Adjoint; break;
        case OpKind::S0Adjoint: k = OpKind::S0; break;
        case OpKind::S1: k = OpKind::S1Adjoint; break;
        case OpKind::S1Adjoint: k = OpKind::S1; break;
        case OpKind::Product: k = OpKind::Product; break;
    }
    return {op.index_set, transpose(op.entries), k};
}

std::pair<CoeffVector, LeakageReport> apply(const TruncatedOperator& op,
                                            const CoeffVector& v) {
    if (!op.index_set.same_truncation(v.index_set) || op.entries.n != v.coeffs.size())
        throw std::invalid_argument("apply: vector not indexed by the operator's set");
    CoeffVector out{v.index_set, matvec(op.entries, v.coeffs), 0.0};
    out.norm2 = norm2(out.coeffs);
    return {std::move(out), LeakageReport{v.norm2, out.norm2, v.norm2 - out.norm2}};
}

RegressionRecord iterate_regression(int m, double tol) {
    const GammaSet S = gamma_set(m, 1);
    const double first = chunked_sum<double>(S.size(), [&](std::size_t i) {
        const double g = static_cast<double>(S.elements[i]);
        return mu_hat(25.0 - g, kQuarter, tol).value *
               mu_hat(5.0 * g - 5.0, kQuarter, tol).value;
    });
    const double second = mu_hat(120.0, kQuarter, tol).value;
    return {first, second, S.size()};
}

double eigen_residual(std::int64_t gamma, std::complex<double> lambda_phase, double tol) {
    if (gamma == 0)
        throw std::invalid_argument("eigen_residual: gamma = 0 is the excluded fixed point");
    const GammaSet S = gamma_set(kEigenDigits, 1);
    if (S.index_of(gamma) < 0)
        throw std::invalid_argument("eigen_residual: gamma is not a spectrum element");
    // ||U e_g - l e_g||^2 = ||col||^2 + |l|^2 - 2 Re(conj(l) <U e_g, e_g>),
    // with <U e_g, e_g> = F(4 gamma), an exact zero for gamma != 0.
    const double col = column_norm2_of_e5g(gamma, S, tol);
    const double cross = mu_hat(static_cast<double>(4 * gamma), kQuarter, tol).value;
    return col + std::norm(lambda_phase) -
           2.0 * (std::conj(lambda_phase) * cross).real();
}

CommutatorNorms commutator_norms(const GammaSet& S, double tol) {
    const TruncatedOperator U = build_U(S, tol);
    const TruncatedOperator S0 = build_S(S, 0);
    const TruncatedOperator S1 = build_S(S, 1);

    const Matrix C0 = subtract(matmul(U.entries, S0.entries), matmul(S0.entries, U.entries));
    const Matrix C1 = subtract(matmul(U.entries, S1.entries), matmul(S1.entries, U.entries));

    const std::size_t n = S.size();
    CommutatorNorms out{0.0, 0.0, 0, 0};
    std::vector<std::size_t> cols0, cols1;
    for (std::size_t g = 0; g < n; ++g) {
        if (S.index_of(4 * S.elements[g]) >= 0) cols0.push_back(g);
        if (S.index_of(4 * S.elements[g] + 1) >= 0) cols1.push_back(g);
    }
    out.closed0 = cols0.size();
    out.closed1 = cols1.size();

    auto frob_cols = [&](const Matrix& C, const std::vector<std::size_t>& cols) {
        const double s =
            chunked_sum<double>(n * cols.size(), [&](std::size_t idx) {
                const std::size_t r = idx / cols.size();
                const std::size_t c = cols[idx % cols.size()];
                return C.at(r, c) * C.at(r, c);
            });
        return std::sqrt(s);
    };
    out.us0_minus_s0u = frob_cols(C0, cols0);
    out.us1_minus_s1u = frob_cols(C1, cols1);
    return out;
}

SpatialObstruction spatial_obstruction(int m, double tol) {
    const GammaSet S = gamma_set(m, 1);
    const double sum_e2 = chunked_sum<double>(S.size(), [&](std::size_t i) {
        return mu_hat(2.0 - static_cast<double>(S.elements[i]), kQuarter, tol).value;
    });
    const double f5 = mu_hat(5.0, kQuarter, tol).value;  // exact 0
    return {mu_hat(10.0, kQuarter, tol).value, f5 * sum_e2};
}

}  // namespace cantor
