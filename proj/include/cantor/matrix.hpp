// Dense row-major real matrices. Every entry of a product is one fixed-order
// pairwise dot product owned by a single worker, so results are independent
// of the thread count, bit for bit.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cantor {

struct Matrix {
    std::size_t n = 0;
    std::vector<double> a;  // row-major, n*n

    Matrix() = default;
    explicit Matrix(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

using CVec = std::vector<std::complex<double>>;

Matrix matmul(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Matrix subtract(const Matrix& A, const Matrix& B);

/// Frobenius norm; deterministic chunked reduction over entries.
double frobenius(const Matrix& A);

/// y = A x for complex x (A is real): two fixed-order dot products per row.
CVec matvec(const Matrix& A, const CVec& x);

/// y = A^T x without materializing the transpose.
CVec matvec_transposed(const Matrix& A, const CVec& x);

double norm2(const CVec& x);                                // sum |x_i|^2
std::complex<double> inner(const CVec& x, const CVec& y);   // sum x_i conj(y_i)

}  // namespace cantor
