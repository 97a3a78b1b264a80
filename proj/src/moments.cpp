#include "cantor/moments.hpp"

#include <cmath>
#include <numbers>

#include "cantor/hermitian_eig.hpp"
#include "cantor/reduce.hpp"

namespace cantor {

namespace {

constexpr double kHermTol = 1e-10;

void check_unit(const CoeffVector& v) {
    if (std::abs(v.norm2 - 1.0) > 1e-9)
        throw std::invalid_argument("moments: vector must have unit norm");
}

// One truncated application with leakage bookkeeping.
CVec step(const Matrix& M, bool adjoint_side, const CVec& w, double& budget,
          double leakage_cap) {
    const double before = norm2(w);
    CVec out = adjoint_side ? matvec_transposed(M, w) : matvec(M, w);
    budget += before - norm2(out);
    if (budget > leakage_cap)
        throw TruncationError("truncation too small: cumulative leakage " +
                              std::to_string(budget) + " exceeds cap " +
                              std::to_string(leakage_cap));
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int k, std::complex<double> coeff) {
    const int N = std::abs(k);
    LaurentPoly p{N, CVec(static_cast<std::size_t>(2 * N + 1), {0.0, 0.0})};
    p.c[static_cast<std::size_t>(k + N)] = coeff;
    return p;
}

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (int k = -N; k <= N; ++k) acc += coeff(k) * std::pow(z, k);
    return acc;
}

MomentSequence moments(const CoeffVector& v, int K, const GammaSet& S, double tol,
                       double leakage_cap) {
    if (!v.index_set.same_truncation(S))
        throw std::invalid_argument("moments: v is not supported in S");
    return moments(v, K, build_U(S, tol), leakage_cap);
}

MomentSequence moments(const CoeffVector& v, int K, const TruncatedOperator& U,
                       double leakage_cap, bool require_unit) {
    if (K < 0) throw std::invalid_argument("moments: K must be nonnegative");
    if (require_unit) check_unit(v);
    if (!v.index_set.same_truncation(U.index_set))
        throw std::invalid_argument("moments: v is not indexed by U's set");

    MomentSequence ms{v, K, CVec(static_cast<std::size_t>(2 * K + 1), {0.0, 0.0}),
                      std::vector<double>(static_cast<std::size_t>(2 * K + 1), 0.0), 0.0};
    ms.c[static_cast<std::size_t>(K)] = {v.norm2, 0.0};  // c_0 = ||v||^2

    CVec w = v.coeffs;
    for (int k = 1; k <= K; ++k) {
        w = step(U.entries, false, w, ms.leakage_budget, leakage_cap);
        ms.c[static_cast<std::size_t>(K + k)] = inner(w, v.coeffs);
        ms.cum_leakage[static_cast<std::size_t>(K + k)] = ms.leakage_budget;
    }
    w = v.coeffs;
    for (int k = 1; k <= K; ++k) {
        w = step(U.entries, true, w, ms.leakage_budget, leakage_cap);
        ms.c[static_cast<std::size_t>(K - k)] = inner(w, v.coeffs);
        ms.cum_leakage[static_cast<std::size_t>(K - k)] = ms.leakage_budget;
    }
    // computed independently on both sides, now asserted Hermitian
    for (int k = 1; k <= K; ++k) {
        const auto diff = ms.moment(-k) - std::conj(ms.moment(k));
        if (std::abs(diff) > kHermTol)
            throw std::logic_error("moments: Hermitian symmetry violated");
    }
    return ms;
}

double atom_at_one(const MomentSequence& ms) {
    const std::complex<double> s =
        pairwise_sum_n<std::complex<double>>(ms.c.size(),
                                             [&](std::size_t i) { return ms.c[i]; });
    return s.real() / static_cast<double>(2 * ms.K + 1);
}

double herglotz_defect(const MomentSequence& ms) {
    const std::size_t n = static_cast<std::size_t>(ms.K) + 1;
    for (int k = 1; k <= ms.K; ++k)
        if (std::abs(ms.moment(-k) - std::conj(ms.moment(k))) > kHermTol)
            throw std::invalid_argument("herglotz_defect: moments are not Hermitian");
    std::vector<std::complex<double>> T(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            T[i * n + j] = ms.moment(static_cast<int>(i) - static_cast<int>(j));
    return hermitian_eigenvalues(std::move(T), n).front();
}

std::pair<CoeffVector, double> apply_laurent(const LaurentPoly& phi, const CoeffVector& v,
                                             const TruncatedOperator& U,
                                             double leakage_cap) {
    CVec acc(v.coeffs.size(), {0.0, 0.0});
    double budget = 0.0;
    // positive powers share one iterate chain, negative powers another;
    // each chain runs only as deep as its last nonzero coefficient
    for (int sign = 0; sign < 2; ++sign) {
        const bool adjoint_side = sign == 1;
        int deepest = 0;
        for (int k = 1; k <= phi.N; ++k)
            if (phi.coeff(adjoint_side ? -k : k) != std::complex<double>{0.0, 0.0})
                deepest = k;
        CVec w = v.coeffs;
        if (!adjoint_side) {
            const auto c0 = phi.coeff(0);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c0 * w[i];
        }
        for (int k = 1; k <= deepest; ++k) {
            w = step(U.entries, adjoint_side, w, budget, leakage_cap);
            const auto ck = phi.coeff(adjoint_side ? -k : k);
            if (ck != std::complex<double>{0.0, 0.0})
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += ck * w[i];
        }
    }
    CoeffVector out{v.index_set, std::move(acc), 0.0};
    out.norm2 = norm2(out.coeffs);
    return {std::move(out), budget};
}

double isometry_residual(const CoeffVector& v, const LaurentPoly& phi, const GammaSet& S,
                         double tol, double leakage_cap, double* budget_out) {
    check_unit(v);
    const TruncatedOperator U = build_U(S, tol);
    const auto [w, budget_w] = apply_laurent(phi, v, U, leakage_cap);
    const double lhs = w.norm2;

    const MomentSequence ms = moments(v, 2 * phi.N, U, leakage_cap);
    std::complex<double> rhs{0.0, 0.0};
    for (int a = -phi.N; a <= phi.N; ++a)
        for (int b = -phi.N; b <= phi.N; ++b)
            rhs += std::conj(phi.coeff(a)) * phi.coeff(b) * ms.moment(b - a);
    if (budget_out) *budget_out = budget_w + ms.leakage_budget;
    return std::abs(lhs - rhs.real());
}

double pushforward_identity_residual(const CoeffVector& v, const LaurentPoly& phi, int k,
                                     const GammaSet& S, double tol, double leakage_cap,
                                     double* budget_out) {
    check_unit(v);
    const TruncatedOperator U = build_U(S, tol);
    const auto [w, budget_w] = apply_laurent(phi, v, U, leakage_cap);

    // c_k(w) by direct application to w
    double budget = budget_w;
    CVec wk = w.coeffs;
    for (int j = 0; j < std::abs(k); ++j)
        wk = step(U.entries, k < 0, wk, budget, leakage_cap);
    const std::complex<double> ck_w = inner(wk, w.coeffs);

    const MomentSequence ms = moments(v, std::abs(k) + 2 * phi.N, U, leakage_cap);
    std::complex<double> rhs{0.0, 0.0};
    for (int a = -phi.N; a <= phi.N; ++a)
        for (int b = -phi.N; b <= phi.N; ++b)
            rhs += std::conj(phi.coeff(a)) * phi.coeff(b) * ms.moment(k + b - a);
    if (budget_out) *budget_out = budget + ms.leakage_budget;
    return std::abs(ck_w - rhs);
}

MeasureEstimate fejer_density(const MomentSequence& ms, int gridM) {
    const int K = ms.K;
    const int M = gridM > 0 ? gridM : 8 * std::max(K, 1);
    MeasureEstimate est{K, std::vector<double>(static_cast<std::size_t>(M)),
                        std::vector<double>(static_cast<std::size_t>(M)), atom_at_one(ms)};
    for (int m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * m / M;
        est.grid[static_cast<std::size_t>(m)] = theta;
        std::complex<double> rho =
            pairwise_sum_n<std::complex<double>>(ms.c.size(), [&](std::size_t i) {
                const int k = static_cast<int>(i) - K;
                const double w = 1.0 - std::abs(k) / static_cast<double>(K + 1);
                return w * ms.c[i] *
                       std::complex<double>{std::cos(k * theta), -std::sin(k * theta)};
            });
        est.density[static_cast<std::size_t>(m)] = rho.real();
    }
    return est;
}

std::vector<RnProfilePoint> rn_sqrt_profile(const CoeffVector& v, const LaurentPoly& phi,
                                            int K, int gridM, double tol,
                                            double leakage_cap) {
    constexpr double kFloor = 1e-4;
    check_unit(v);
    const TruncatedOperator U = build_U(v.index_set, tol);
    const MomentSequence ms_v = moments(v, K, U, leakage_cap);
    const auto [w, budget_w] = apply_laurent(phi, v, U, leakage_cap);
    // w is not normalized, so its budget ceiling scales with ||w||^2
    const MomentSequence ms_w =
        moments(w, K, U, leakage_cap * std::max(1.0, w.norm2), /*require_unit=*/false);

    const MeasureEstimate dv = fejer_density(ms_v, gridM);
    const MeasureEstimate dw = fejer_density(ms_w, gridM);
    std::vector<RnProfilePoint> profile;
    for (std::size_t i = 0; i < dv.grid.size(); ++i) {
        if (dv.density[i] <= kFloor) continue;
        const double theta = dv.grid[i];
        const double ratio = std::max(dw.density[i], 0.0) / dv.density[i];
        profile.push_back({theta, std::sqrt(ratio),
                           std::abs(phi.eval({std::cos(theta), std::sin(theta)}))});
    }
    return profile;
}

CesaroResult cesaro_average(const CoeffVector& f, int N, const GammaSet& S, double tol,
                            double leakage_cap) {
    check_unit(f);
    if (!f.index_set.same_truncation(S))
        throw std::invalid_argument("cesaro_average: f is not supported in S");
    if (N < 0) throw std::invalid_argument("cesaro_average: N must be nonnegative");
    const TruncatedOperator U = build_U(S, tol);

    CVec acc = f.coeffs;
    CVec w = f.coeffs;
    double budget = 0.0;
    for (int k = 1; k <= N; ++k) {
        w = step(U.entries, false, w, budget, leakage_cap);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w[i];
    }
    const double inv = 1.0 / (N + 1);
    for (auto& x : acc) x *= inv;

    const std::complex<double> proj = f.coeffs[0];  // <f, e_0>: element 0 is gamma = 0
    acc[0] -= proj;
    return {proj, std::sqrt(norm2(acc)), budget};
}

}  // namespace cantor
