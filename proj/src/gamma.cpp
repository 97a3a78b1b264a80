#include "cantor/gamma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cantor {

std::int64_t gamma_element(std::uint64_t n, std::int64_t scale) {
    if (scale <= 0) throw std::invalid_argument("gamma_element: scale must be positive");
    if (n >= (std::uint64_t{1} << 31))
        throw std::range_error("gamma_element: n exceeds the 31-digit guard");
    std::int64_t g = 0;
    std::int64_t p = 1;  // 4^i
    for (std::uint64_t bits = n; bits; bits >>= 1) {
        if (bits & 1) g += p;
        p *= 4;
    }
    // max g = (4^31 - 1)/3 ~ 1.54e18; scale 5 still fits in int64
    if (scale > 5 && g > (std::numeric_limits<std::int64_t>::max)() / scale)
        throw std::range_error("gamma_element: scaled element overflows 64 bits");
    return scale * g;
}

GammaSet gamma_set(int m, std::int64_t scale) {
    if (m < 0 || m > 31) throw std::range_error("gamma_set: m must lie in [0, 31]");
    GammaSet s;
    s.digit_count = m;
    s.scale = scale;
    s.elements.resize(std::size_t{1} << m);
    for (std::uint64_t n = 0; n < s.elements.size(); ++n)
        s.elements[n] = gamma_element(n, scale);
    return s;
}

std::int64_t GammaSet::index_of(std::int64_t v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) return -1;
    return it - elements.begin();
}

}  // namespace cantor
