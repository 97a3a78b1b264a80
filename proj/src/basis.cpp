#include "cantor/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cantor/reduce.hpp"

namespace cantor {

CoeffVector basis_vector(const GammaSet& S, std::int64_t gamma) {
    const std::int64_t idx = S.index_of(gamma);
    if (idx < 0) throw std::invalid_argument("basis_vector: gamma not in the index set");
    CoeffVector v{S, CVec(S.size(), {0.0, 0.0}), 1.0};
    v.coeffs[static_cast<std::size_t>(idx)] = {1.0, 0.0};
    return v;
}

CoeffVector combination(const GammaSet& S, std::span<const std::int64_t> gammas,
                        std::span<const std::complex<double>> weights) {
    if (gammas.size() != weights.size())
        throw std::invalid_argument("combination: gammas/weights size mismatch");
    CoeffVector v{S, CVec(S.size(), {0.0, 0.0}), 0.0};
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        const std::int64_t idx = S.index_of(gammas[i]);
        if (idx < 0) throw std::invalid_argument("combination: gamma not in the index set");
        v.coeffs[static_cast<std::size_t>(idx)] += weights[i];
    }
    const double n2 = norm2(v.coeffs);
    if (n2 == 0.0) throw std::invalid_argument("combination: zero vector");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& c : v.coeffs) c *= s;
    v.norm2 = norm2(v.coeffs);
    return v;
}

CoeffVector expand(double t, const GammaSet& S, double tol) {
    CoeffVector v{S, CVec(S.size()), 0.0};
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(S.size()); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        v.coeffs[ii] = {mu_hat(t - static_cast<double>(S.elements[ii]), kQuarter, tol).value,
                        0.0};
    }
    v.norm2 = norm2(v.coeffs);
    return v;
}

Matrix gram_matrix(std::span<const double> freqs, double tol) {
    std::vector<double> sorted(freqs.begin(), freqs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("gram_matrix: duplicate frequencies");

    const std::size_t n = freqs.size();
    Matrix G(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < n; ++j)
            G.at(ii, j) = mu_hat(freqs[ii] - freqs[j], kQuarter, tol).value;
    }
    return G;
}

double parseval_defect(double t, const GammaSet& S, double tol) {
    const double sum = chunked_sum<double>(S.size(), [&](std::size_t i) {
        const double c = mu_hat(t - static_cast<double>(S.elements[i]), kQuarter, tol).value;
        return c * c;
    });
    return 1.0 - sum;
}

}  // namespace cantor
