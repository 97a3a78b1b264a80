#include "cantor/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cantor {

namespace {

using Cx = std::complex<double>;

double offdiag_norm(const std::vector<Cx>& A, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(A[p * n + q]);
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<Cx> A, std::size_t n,
                                          double herm_tol) {
    if (A.size() != n * n) throw std::invalid_argument("hermitian_eigenvalues: bad size");
    double scale = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        if (std::abs(A[p * n + p].imag()) > herm_tol)
            throw std::invalid_argument("hermitian_eigenvalues: non-real diagonal");
        for (std::size_t q = 0; q < n; ++q) {
            scale = std::max(scale, std::abs(A[p * n + q]));
            if (std::abs(A[p * n + q] - std::conj(A[q * n + p])) > herm_tol)
                throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
        }
    }
    // exact Hermitian symmetrization before rotating
    for (std::size_t p = 0; p < n; ++p) {
        A[p * n + p] = {A[p * n + p].real(), 0.0};
        for (std::size_t q = p + 1; q < n; ++q) {
            const Cx v = 0.5 * (A[p * n + q] + std::conj(A[q * n + p]));
            A[p * n + q] = v;
            A[q * n + p] = std::conj(v);
        }
    }

    const double stop = std::max(scale, 1.0) * 1e-14 * static_cast<double>(n);
    for (int sweep = 0; sweep < 60 && offdiag_norm(A, n) > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cx apq = A[p * n + q];
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const Cx phase = apq / r;  // e^{i theta}
                const double app = A[p * n + p].real();
                const double aqq = A[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Cx gp = c * phase;   // G[p][p]
                const Cx gq = s * phase;   // G[p][q]

                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const Cx aip = A[i * n + p];
                    const Cx aiq = A[i * n + q];
                    A[i * n + p] = aip * gp - aiq * s;
                    A[i * n + q] = aip * gq + aiq * c;
                    A[p * n + i] = std::conj(A[i * n + p]);
                    A[q * n + i] = std::conj(A[i * n + q]);
                }
                A[p * n + p] = {app - t * r, 0.0};
                A[q * n + q] = {aqq + t * r, 0.0};
                A[p * n + q] = {0.0, 0.0};
                A[q * n + p] = {0.0, 0.0};
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = A[i * n + i].real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace cantor
