// The Jorgensen-Pedersen spectrum: finite sums of distinct powers of 4 with
// digits in {0,1}, enumerated by spreading the binary digits of n into
// base 4. Scaled copies (scale 5) index the second orthonormal basis.

#pragma once

#include <cstdint>
#include <vector>

namespace cantor {

struct GammaSet {
    std::vector<std::int64_t> elements;  // strictly increasing, elements[0] = 0
    int digit_count = 0;                 // m; |elements| = 2^m
    std::int64_t scale = 1;              // 1 or 5 here

    std::size_t size() const { return elements.size(); }
    bool same_truncation(const GammaSet& o) const {
        return digit_count == o.digit_count && scale == o.scale;
    }
    /// Index of value v in elements, or -1 if absent.
    std::int64_t index_of(std::int64_t v) const;
};

/// n-th element of scale * Gamma: bit i of n contributes scale * 4^i.
/// Strictly increasing in n. Throws std::range_error past the 64-bit guard
/// (n needs more than 31 binary digits).
std::int64_t gamma_element(std::uint64_t n, std::int64_t scale = 1);

/// The 2^m smallest elements of scale * Gamma, sorted. Requires m <= 31.
GammaSet gamma_set(int m, std::int64_t scale = 1);

}  // namespace cantor
