#include "cantor/transform.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace cantor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDepth = 1100;  // lambda^k underflows long before this

// Integer t at lambda = 1/4: factor k has angle (pi/2) * (4t / 4^k), which is
// an exact cosine zero iff t / 4^{k-1} is an odd integer. Returns the factor
// index, or 0 if no factor is an exact zero.
int exact_zero_factor(double t) {
    if (t != std::floor(t) || std::abs(t) >= 0x1p62) return 0;
    std::int64_t n = static_cast<std::int64_t>(std::abs(t));
    if (n == 0) return 0;
    int k = 1;
    while (n % 4 == 0) {
        n /= 4;
        ++k;
    }
    return (n % 2 != 0) ? k : 0;
}

// Ascending powers lambda^1 .. lambda^{kmax}; exact for lambda = 1/4.
void fill_powers(double lambda, int kmax, std::vector<double>& pows) {
    pows.resize(static_cast<std::size_t>(kmax) + 1);
    pows[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) pows[static_cast<std::size_t>(k)] = pows[static_cast<std::size_t>(k - 1)] * lambda;
}

}  // namespace

ScaleRatio::ScaleRatio(double l) : lambda(l) {
    if (!(l > 0.0) || !(l < 1.0))
        throw std::invalid_argument("ScaleRatio: lambda must lie in (0,1)");
}

double tail_bound_at(double t, ScaleRatio lambda, int depth) {
    if (depth < 0) throw std::invalid_argument("tail_bound_at: negative depth");
    const double a = std::abs(t);
    // u = 2*pi*|t|*lambda^{K+1}; bound = u^2 / (2 (1 - lambda^2)).
    const double u = kTwoPi * a * std::pow(lambda.lambda, depth + 1);
    return u * u / (2.0 * (1.0 - lambda.lambda * lambda.lambda));
}

int truncation_depth(double t, ScaleRatio lambda, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("truncation_depth: tol must be positive");
    const double a = std::abs(t);
    const double l = lambda.lambda;
    const double s = kTwoPi * a;
    double lk1 = l;  // lambda^{K+1} for K = 0
    for (int K = 1; K <= kMaxDepth; ++K) {
        lk1 *= l;
        const double u = s * lk1;
        const bool small_angles = u / (1.0 - l) <= 0.5;
        const double bound = u * u / (2.0 * (1.0 - l * l));
        if (small_angles && bound <= tol) return K;
    }
    return kMaxDepth;
}

TransformValue mu_hat(double t, ScaleRatio lambda, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("mu_hat: tol must be positive");
    const double a = std::abs(t);  // the product is even in t

    if (lambda.lambda == 0.25) {
        if (const int kz = exact_zero_factor(a)) return {t, 0.0, kz, 0.0};
    }

    const int K = truncation_depth(a, lambda, tol);
    static thread_local std::vector<double> pows;
    fill_powers(lambda.lambda, K, pows);

    double value = 1.0;
    for (int k = K; k >= 1; --k) {
        const double factor = std::cos(kTwoPi * (a * pows[static_cast<std::size_t>(k)]));
        if (factor == 0.0) return {t, 0.0, k, 0.0};
        value *= factor;
    }
    return {t, value, K, tail_bound_at(a, lambda, K)};
}

double mu_hat_value(double t, double tol) { return mu_hat(t, kQuarter, tol).value; }

double functional_eq_residual(double t, double tol) {
    const double lhs = mu_hat(4.0 * t, kQuarter, tol).value;
    // cos is even; use |t| so the factor matches mu_hat's internal angles bitwise
    const double rhs = std::cos(kTwoPi * std::abs(t)) * mu_hat(t, kQuarter, tol).value;
    return std::abs(lhs - rhs);
}

std::vector<TransformValue> mu_hat_batch(std::span<const double> ts, ScaleRatio lambda,
                                         double tol) {
    std::vector<TransformValue> out(ts.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(ts.size()); ++i)
        out[static_cast<std::size_t>(i)] = mu_hat(ts[static_cast<std::size_t>(i)], lambda, tol);
    return out;
}

}  // namespace cantor
