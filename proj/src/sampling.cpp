#include "cantor/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cantor/reduce.hpp"
#include "cantor/rng.hpp"

namespace cantor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact path for lambda = 1/4, depth <= 31: signed numerator sum s_k 4^{D-k}
// fits in int64 and the final division by 4^D is the only rounding.
double point_quarter_exact(std::uint64_t seed, std::uint64_t idx, int depth) {
    std::int64_t num = 0;
    int k = 0;
    std::uint64_t w = 0;
    std::uint64_t bits = 0;
    for (int d = 1; d <= depth; ++d) {
        if (k == 0) {
            bits = rng::word(seed, idx, w++);
            k = 64;
        }
        const std::int64_t sign = (bits & 1) ? 1 : -1;
        bits >>= 1;
        --k;
        num = num * 4 + sign;
    }
    return static_cast<double>(num) / std::exp2(2 * depth);
}

double point_horner(std::uint64_t seed, std::uint64_t idx, int depth, double lambda) {
    double v = 0.0;
    // consume sign bits in the same stream order as the exact path
    std::vector<int> signs(static_cast<std::size_t>(depth));
    int k = 0;
    std::uint64_t w = 0, bits = 0;
    for (int d = 0; d < depth; ++d) {
        if (k == 0) {
            bits = rng::word(seed, idx, w++);
            k = 64;
        }
        signs[static_cast<std::size_t>(d)] = (bits & 1) ? 1 : -1;
        bits >>= 1;
        --k;
    }
    for (int d = depth - 1; d >= 0; --d)
        v = static_cast<double>(signs[static_cast<std::size_t>(d)]) + v * lambda;
    return v * lambda;
}

}  // namespace

SampleBatch sample_batch(ScaleRatio lambda, int depth, std::size_t n, std::uint64_t seed) {
    if (depth < 1) throw std::invalid_argument("sample_batch: depth must be >= 1");
    if (n < 1) throw std::invalid_argument("sample_batch: need at least one sample");
    SampleBatch batch{lambda.lambda, depth, seed, std::vector<double>(n)};
    const bool exact = lambda.lambda == 0.25 && depth <= 31;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::uint64_t idx = static_cast<std::uint64_t>(i);
        batch.points[static_cast<std::size_t>(i)] =
            exact ? point_quarter_exact(seed, idx, depth)
                  : point_horner(seed, idx, depth, lambda.lambda);
    }
    return batch;
}

std::complex<double> empirical_char(double t, const SampleBatch& batch) {
    const std::size_t n = batch.points.size();
    const std::complex<double> s =
        chunked_sum<std::complex<double>>(n, [&](std::size_t i) {
            const double a = kTwoPi * t * batch.points[i];
            return std::complex<double>{std::cos(a), std::sin(a)};
        });
    return s / static_cast<double>(n);
}

double hutchinson_residual(const SampleBatch& batch, int gridM) {
    if (batch.points.empty()) throw std::invalid_argument("hutchinson_residual: empty batch");
    if (gridM < 2) throw std::invalid_argument("hutchinson_residual: grid too small");
    std::vector<double> sorted = batch.points;
    std::sort(sorted.begin(), sorted.end());
    const double inv_n = 1.0 / static_cast<double>(sorted.size());
    auto cdf = [&](double x) {
        return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), x) -
                                   sorted.begin()) *
               inv_n;
    };
    const double lam = batch.lambda;
    const double lo = -lam / (1.0 - lam), hi = lam / (1.0 - lam);
    double worst = 0.0;
    for (int i = 0; i < gridM; ++i) {
        const double x = lo + (hi - lo) * i / (gridM - 1);
        const double r = std::abs(cdf(x) - 0.5 * cdf(x / lam - 1.0) - 0.5 * cdf(x / lam + 1.0));
        worst = std::max(worst, r);
    }
    return worst;
}

MassEstimate pushforward_mass(const SampleBatch& batch, int n_scale, const IntervalQuery& q) {
    if (n_scale < 1) throw std::invalid_argument("pushforward_mass: n_scale must be >= 1");
    const bool unit = q.frame == IntervalQuery::Frame::UnitEmbedded;
    const double shift = unit ? 1.0 / 3.0 : 0.0;
    std::size_t count = 0;
    const std::size_t n = batch.points.size();
    // integer counts: order-independent, but keep a fixed schedule anyway
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        double y = batch.points[static_cast<std::size_t>(i)] + shift;
        if (n_scale > 1) {
            y *= static_cast<double>(n_scale);
            const double f = y - std::floor(y);
            // left-continuous branches: tau(k/n) = 1, matching the preimage
            // intervals (k/n + c, (k+1)/n]
            y = (f == 0.0 && y > 0.0) ? 1.0 : f;
        }
        if (y > q.a && y <= q.b) ++count;
    }
    const double p = static_cast<double>(count) / static_cast<double>(n);
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double nn = static_cast<double>(n);
    const double denom = 1.0 + z * z / nn;
    const double center = (p + z * z / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / nn + z * z / (4.0 * nn * nn)) / denom;
    return {p, std::max(0.0, center - half), std::min(1.0, center + half), count, n};
}

Figure1Data figure1_data(int levels, int gridM) {
    if (levels < 1) throw std::invalid_argument("figure1_data: levels must be >= 1");
    if (levels > 12) throw std::range_error("figure1_data: levels > 12 refused");
    if (gridM < 2) throw std::invalid_argument("figure1_data: grid too small");

    Figure1Data out;
    out.sawtooth.reserve(static_cast<std::size_t>(gridM));
    for (int i = 0; i < gridM; ++i) {
        const double x = static_cast<double>(i) / (gridM - 1);
        const double z = 5.0 * x;
        const double f = z - std::floor(z);
        out.sawtooth.push_back({x, (f == 0.0 && z > 0.0) ? 1.0 : f});
    }

    // unit-embedded IFS x/4 and (x+2)/4 refining [0, 2/3]
    std::vector<std::pair<double, double>> cur{{0.0, 2.0 / 3.0}};
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::vector<std::pair<double, double>> next;
        next.reserve(cur.size() * 2);
        for (const auto& [a, b] : cur) {
            next.push_back({a / 4.0, b / 4.0});
            next.push_back({(a + 2.0) / 4.0, (b + 2.0) / 4.0});
        }
        std::sort(next.begin(), next.end());
        cur = std::move(next);
        for (const auto& [a, b] : cur) out.cantor_levels.push_back({lvl, a, b});
    }

    for (int k = 0; k < 5; ++k)
        out.preimages.push_back(
            {0, k / 5.0 + 2.0 / 15.0, (k + 1) / 5.0});
    return out;
}

}  // namespace cantor
