#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <vector>

#include "cantor/basis.hpp"
#include "cantor/gamma.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cantor;

TEST_CASE("gamma enumeration matches the published sets") {
    const std::vector<std::int64_t> g1{0, 1, 4, 5, 16, 17, 20, 21, 64, 65};
    for (std::size_t n = 0; n < g1.size(); ++n) CHECK(gamma_element(n, 1) == g1[n]);

    const std::vector<std::int64_t> g5{0, 5, 20, 25, 80, 85, 100, 105, 320};
    for (std::size_t n = 0; n < g5.size(); ++n) CHECK(gamma_element(n, 5) == g5[n]);

    for (int k = 0; k <= 20; ++k)
        CHECK(gamma_element(std::uint64_t{1} << k, 1) == std::int64_t{1} << (2 * k));
}

TEST_CASE("enumeration is strictly increasing and bijective onto gamma_set") {
    const GammaSet S = gamma_set(12, 1);
    std::int64_t prev = -1;
    for (std::uint64_t n = 0; n < S.size(); ++n) {
        const std::int64_t g = gamma_element(n, 1);
        CHECK(g > prev);
        CHECK(g == S.elements[n]);
        CHECK(g == oracle::gamma_element(n));
        prev = g;
    }
}

TEST_CASE("scaling consistency") {
    for (std::uint64_t n = 0; n < 4096; ++n)
        CHECK(gamma_element(n, 5) == 5 * gamma_element(n, 1));
}

TEST_CASE("range guards") {
    CHECK_THROWS_AS(gamma_element(std::uint64_t{1} << 31, 1), std::range_error);
    CHECK_THROWS_AS(gamma_set(32, 1), std::range_error);
    CHECK_THROWS_AS(gamma_element(3, 0), std::invalid_argument);
    CHECK_NOTHROW(gamma_element((std::uint64_t{1} << 31) - 1, 5));
}

TEST_CASE("gamma_set shapes") {
    const GammaSet s0 = gamma_set(0, 1);
    CHECK(s0.size() == 1);
    CHECK(s0.elements[0] == 0);

    const GammaSet s2 = gamma_set(2, 1);
    CHECK(s2.elements == std::vector<std::int64_t>{0, 1, 4, 5});

    const GammaSet s9 = gamma_set(9, 1);
    CHECK(s9.size() == 512);
    CHECK(s9.elements.back() == 87381);  // sum_{i<9} 4^i

    // elements[2^k] = scale * 4^k
    const GammaSet t = gamma_set(8, 5);
    for (int k = 0; k < 8; ++k)
        CHECK(t.elements[std::size_t{1} << k] == 5 * (std::int64_t{1} << (2 * k)));
}

TEST_CASE("expand: ONB element gives a unit coefficient vector") {
    const GammaSet S = gamma_set(6, 1);
    const CoeffVector v = expand(21.0, S, 1e-12);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S.elements[i] == 21)
            CHECK(v.coeffs[i].real() == 1.0);
        else
            CHECK(std::abs(v.coeffs[i]) <= 1e-9);
    }
    CHECK(v.norm2 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("expand: the e_125 coefficient at gamma = 5 is F(120)") {
    const GammaSet S = gamma_set(9, 1);
    const CoeffVector v = expand(125.0, S, 1e-12);
    const auto idx = S.index_of(5);
    REQUIRE(idx >= 0);
    CHECK(v.coeffs[static_cast<std::size_t>(idx)].real() ==
          doctest::Approx(0.504612414529595).epsilon(1e-10));
    CHECK(v.coeffs[static_cast<std::size_t>(idx)].real() ==
          doctest::Approx(mu_hat_value(120.0)).epsilon(1e-12));
}

TEST_CASE("expand: partial Parseval sum off the spectrum") {
    const GammaSet S = gamma_set(12, 1);
    const CoeffVector v = expand(2.0, S, 1e-12);
    CHECK(v.norm2 < 1.0);
    CHECK(std::abs(v.norm2 - oracle::parseval_sum(2.0, 12)) <= 1e-10);
    CHECK(v.norm2 == doctest::Approx(0.9999999098).epsilon(1e-8));
}

TEST_CASE("gram matrix: identity on spectrum frequencies") {
    const GammaSet S = gamma_set(2, 1);
    std::vector<double> freqs(S.elements.begin(), S.elements.end());
    const Matrix G = gram_matrix(freqs, 1e-12);
    for (std::size_t i = 0; i < G.n; ++i)
        for (std::size_t j = 0; j < G.n; ++j) CHECK(G.at(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("gram matrix: identity for both bases through m = 9") {
    for (const std::int64_t scale : {std::int64_t{1}, std::int64_t{5}}) {
        const GammaSet S = gamma_set(9, scale);
        std::vector<double> freqs(S.elements.begin(), S.elements.end());
        const Matrix G = gram_matrix(freqs, 1e-12);
        double max_off = 0.0, max_diag = 0.0;
        for (std::size_t i = 0; i < G.n; ++i)
            for (std::size_t j = 0; j < G.n; ++j) {
                if (i == j)
                    max_diag = std::max(max_diag, std::abs(G.at(i, j) - 1.0));
                else
                    max_off = std::max(max_off, std::abs(G.at(i, j)));
            }
        CHECK(max_off <= 1e-9);
        CHECK(max_diag <= 1e-12);
    }
}

TEST_CASE("gram matrix: non-orthogonal pair and duplicate rejection") {
    const std::vector<double> f{0.0, 2.0};
    const Matrix G = gram_matrix(f, 1e-12);
    CHECK(G.at(0, 1) == doctest::Approx(-0.692628912699446).epsilon(1e-10));
    CHECK(G.at(0, 1) == G.at(1, 0));

    const std::vector<double> dup{0.0, 2.0, 2.0};
    CHECK_THROWS_AS(gram_matrix(dup, 1e-12), std::invalid_argument);
}

TEST_CASE("parseval defect: in-spectrum, off-spectrum, and monotonicity") {
    const GammaSet S12 = gamma_set(12, 1);
    CHECK(std::abs(parseval_defect(21.0, S12)) <= 1e-9);

    const double d_half = parseval_defect(0.5, S12);
    CHECK(std::abs(d_half - (1.0 - oracle::parseval_sum(0.5, 12))) <= 1e-10);
    CHECK(d_half == doctest::Approx(2.5685e-8).epsilon(0.01));

    const double d125 = parseval_defect(125.0, gamma_set(9, 1));
    CHECK(d125 <= 0.5);
    CHECK(d125 == doctest::Approx(1.50594e-4).epsilon(1e-3));

    for (const double t : {0.5, 2.0, 125.0, -17.3}) {
        double prev = 1.0;
        for (int m = 2; m <= 12; m += 2) {
            const double d = parseval_defect(t, gamma_set(m, 1));
            CHECK(d >= -1e-9);
            CHECK(d <= prev + 1e-12);
            prev = d;
        }
    }
}

TEST_CASE("bessel bound across the two bases") {
    // expansion of e_21 over the truncated 5*Gamma basis stays under 1
    const GammaSet S5 = gamma_set(12, 5);
    const CoeffVector v = expand(21.0, S5, 1e-12);
    CHECK(v.norm2 <= 1.0 + 1e-9);
    CHECK(v.norm2 == doctest::Approx(0.948).epsilon(0.01));
}

TEST_CASE("basis_vector and combination") {
    const GammaSet S = gamma_set(4, 1);
    const CoeffVector e5 = basis_vector(S, 5);
    CHECK(e5.norm2 == 1.0);
    CHECK_THROWS_AS(basis_vector(S, 3), std::invalid_argument);

    const std::vector<std::int64_t> gs{0, 1};
    const std::vector<std::complex<double>> ws{{1.0, 0.0}, {1.0, 0.0}};
    const CoeffVector mix = combination(S, gs, ws);
    CHECK(mix.norm2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mix.coeffs[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}
