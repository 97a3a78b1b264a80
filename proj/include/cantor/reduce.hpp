// Deterministic summation kernels.
//
// Every sum in this library is computed with a fixed association order:
// pairwise (balanced binary tree) within fixed-size chunks, then pairwise
// over the chunk partials. Chunk boundaries depend only on the element
// count, never on the thread count, so parallel and serial evaluations of
// the same sum are bit-identical.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cantor {

inline constexpr std::size_t kReduceChunk = 4096;

namespace detail {

template <class T, class F>
T pairwise_range(std::size_t lo, std::size_t hi, F&& term) {
    const std::size_t n = hi - lo;
    if (n <= 16) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        return acc;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_range<T>(lo, mid, term) + pairwise_range<T>(mid, hi, term);
}

}  // namespace detail

/// Pairwise sum of term(i) for i in [0, n), single-threaded.
template <class T, class F>
T pairwise_sum_n(std::size_t n, F&& term) {
    if (n == 0) return T{};
    return detail::pairwise_range<T>(0, n, term);
}

inline double pairwise_sum(std::span<const double> xs) {
    return pairwise_sum_n<double>(xs.size(), [&](std::size_t i) { return xs[i]; });
}

inline std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs) {
    return pairwise_sum_n<std::complex<double>>(xs.size(),
                                                [&](std::size_t i) { return xs[i]; });
}

/// Chunked pairwise sum; chunk partials may be computed by any number of
/// workers because chunk boundaries are fixed. The OpenMP variant lives in
/// reduce.cpp-style call sites; this header form is the serial schedule.
template <class T, class F>
T chunked_sum_serial(std::size_t n, F&& term) {
    if (n == 0) return T{};
    const std::size_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
    std::vector<T> partial(nchunks);
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = c * kReduceChunk;
        const std::size_t hi = lo + std::min<std::size_t>(kReduceChunk, n - lo);
        partial[c] = detail::pairwise_range<T>(lo, hi, term);
    }
    return pairwise_sum_n<T>(partial.size(), [&](std::size_t c) { return partial[c]; });
}

/// Same sum, chunk partials computed in parallel. Bit-identical to
/// chunked_sum_serial for any thread count.
template <class T, class F>
T chunked_sum(std::size_t n, F&& term) {
    if (n == 0) return T{};
    const std::size_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
    if (nchunks == 1) return detail::pairwise_range<T>(0, n, term);
    std::vector<T> partial(nchunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kReduceChunk;
        const std::size_t hi = lo + std::min<std::size_t>(kReduceChunk, n - lo);
        partial[static_cast<std::size_t>(c)] = detail::pairwise_range<T>(lo, hi, term);
    }
    return pairwise_sum_n<T>(partial.size(), [&](std::size_t c) { return partial[c]; });
}

}  // namespace cantor
