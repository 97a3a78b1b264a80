#include "cantor/serial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cantor/rng.hpp"

namespace cantor::serial {

std::vector<TransformValue> mu_hat_batch(std::span<const double> ts, ScaleRatio lambda,
                                         double tol) {
    std::vector<TransformValue> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = mu_hat(ts[i], lambda, tol);
    return out;
}

Matrix gram_matrix(std::span<const double> freqs, double tol) {
    std::vector<double> sorted(freqs.begin(), freqs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("gram_matrix: duplicate frequencies");
    Matrix G(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        for (std::size_t j = 0; j < freqs.size(); ++j)
            G.at(i, j) = mu_hat(freqs[i] - freqs[j], kQuarter, tol).value;
    return G;
}

Matrix build_U_entries(const GammaSet& S, double tol) {
    const std::size_t n = S.size();
    Matrix M(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t xi = 0; xi < n; ++xi)
            M.at(xi, g) = mu_hat(static_cast<double>(5 * S.elements[g] - S.elements[xi]),
                                 kQuarter, tol)
                              .value;
    return M;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.n != B.n) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix C(A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < A.n; ++k) acc += A.at(i, k) * B.at(k, j);
            C.at(i, j) = acc;
        }
    return C;
}

CVec matvec(const Matrix& A, const CVec& x) {
    if (A.n != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    CVec y(A.n, {0.0, 0.0});
    for (std::size_t i = 0; i < A.n; ++i) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < A.n; ++k) acc += A.at(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

double parseval_defect(double t, const GammaSet& S, double tol) {
    double s = 0.0;
    for (const auto g : S.elements) {
        const double c = mu_hat(t - static_cast<double>(g), kQuarter, tol).value;
        s += c * c;
    }
    return 1.0 - s;
}

SampleBatch sample_batch(ScaleRatio lambda, int depth, std::size_t n, std::uint64_t seed) {
    if (depth < 1) throw std::invalid_argument("sample_batch: depth must be >= 1");
    if (n < 1) throw std::invalid_argument("sample_batch: need at least one sample");
    SampleBatch batch{lambda.lambda, depth, seed, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        std::uint64_t bits = 0;
        int avail = 0;
        std::uint64_t w = 0;
        std::vector<int> signs(static_cast<std::size_t>(depth));
        for (int d = 0; d < depth; ++d) {
            if (avail == 0) {
                bits = rng::word(seed, i, w++);
                avail = 64;
            }
            signs[static_cast<std::size_t>(d)] = (bits & 1) ? 1 : -1;
            bits >>= 1;
            --avail;
        }
        for (int d = depth - 1; d >= 0; --d)
            v = static_cast<double>(signs[static_cast<std::size_t>(d)]) + v * lambda.lambda;
        batch.points[i] = v * lambda.lambda;
    }
    return batch;
}

std::complex<double> empirical_char(double t, const SampleBatch& batch) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::complex<double> acc{0.0, 0.0};
    for (const double x : batch.points) {
        const double a = kTwoPi * t * x;
        acc += std::complex<double>{std::cos(a), std::sin(a)};
    }
    return acc / static_cast<double>(batch.points.size());
}

}  // namespace cantor::serial
