#include "cantor/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "cantor/reduce.hpp"

namespace cantor {

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.n != B.n) throw std::invalid_argument("matmul: dimension mismatch");
    const std::size_t n = A.n;
    Matrix C(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < n; ++j)
            C.at(ii, j) = pairwise_sum_n<double>(
                n, [&](std::size_t k) { return A.at(ii, k) * B.at(k, j); });
    }
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Matrix subtract(const Matrix& A, const Matrix& B) {
    if (A.n != B.n) throw std::invalid_argument("subtract: dimension mismatch");
    Matrix C(A.n);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

double frobenius(const Matrix& A) {
    const double s = chunked_sum<double>(A.a.size(),
                                         [&](std::size_t i) { return A.a[i] * A.a[i]; });
    return std::sqrt(s);
}

CVec matvec(const Matrix& A, const CVec& x) {
    if (A.n != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    const std::size_t n = A.n;
    CVec y(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const double re = pairwise_sum_n<double>(
            n, [&](std::size_t k) { return A.at(ii, k) * x[k].real(); });
        const double im = pairwise_sum_n<double>(
            n, [&](std::size_t k) { return A.at(ii, k) * x[k].imag(); });
        y[ii] = {re, im};
    }
    return y;
}

CVec matvec_transposed(const Matrix& A, const CVec& x) {
    if (A.n != x.size()) throw std::invalid_argument("matvec_transposed: dimension mismatch");
    const std::size_t n = A.n;
    CVec y(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const double re = pairwise_sum_n<double>(
            n, [&](std::size_t k) { return A.at(k, ii) * x[k].real(); });
        const double im = pairwise_sum_n<double>(
            n, [&](std::size_t k) { return A.at(k, ii) * x[k].imag(); });
        y[ii] = {re, im};
    }
    return y;
}

double norm2(const CVec& x) {
    return chunked_sum_serial<double>(x.size(), [&](std::size_t i) { return std::norm(x[i]); });
}

std::complex<double> inner(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
    return chunked_sum_serial<std::complex<double>>(
        x.size(), [&](std::size_t i) { return x[i] * std::conj(y[i]); });
}

}  // namespace cantor
