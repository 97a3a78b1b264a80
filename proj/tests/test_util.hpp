#pragma once

#include <cmath>
#include <numbers>

#include "cantor/basis.hpp"
#include "cantor/rng.hpp"

namespace testutil {

// deterministic complex gaussian-ish unit vector from the counter streams
inline cantor::CoeffVector random_unit(const cantor::GammaSet& S, std::uint64_t seed) {
    cantor::CVec c(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        const double u1 = std::max(cantor::rng::uniform01(seed, i, 0), 1e-12);
        const double u2 = cantor::rng::uniform01(seed, i, 1);
        const double r = std::sqrt(-2.0 * std::log(u1));
        c[i] = {r * std::cos(2.0 * std::numbers::pi * u2),
                r * std::sin(2.0 * std::numbers::pi * u2)};
    }
    double n2 = 0.0;
    for (const auto& z : c) n2 += std::norm(z);
    const double s = 1.0 / std::sqrt(n2);
    for (auto& z : c) z *= s;
    cantor::CoeffVector v{S, std::move(c), 0.0};
    double check = 0.0;
    for (const auto& z : v.coeffs) check += std::norm(z);
    v.norm2 = check;
    return v;
}

}  // namespace testutil
