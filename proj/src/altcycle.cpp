#include "cutgen/altcycle.hpp"

#include <stdexcept>

namespace cutgen {

Code alt_cycle(const Code& amplitude, const Code& k) {
    if (amplitude < 2) throw std::invalid_argument("alt_cycle: amplitude must be >= 2");
    if (k < 1) throw std::invalid_argument("alt_cycle: k must be >= 1");
    // Offset within one period of length 2N. The descending leg N..1 occupies
    // offsets [0, N), the ascending leg 1..N offsets [N, 2N).
    const Code r = (k - 1) % (2 * amplitude);
    if (r < amplitude) return amplitude - r;
    return r - amplitude + 1;
}

Code alt_cycle_one_period(const Code& amplitude, const Code& k) {
    if (amplitude < 2) throw std::invalid_argument("alt_cycle_one_period: amplitude must be >= 2");
    if (k < 1 || k > 2 * amplitude)
        throw std::invalid_argument("alt_cycle_one_period: k must lie in [1, 2M]");
    if (k <= amplitude) return amplitude + 1 - k;
    return k - amplitude;
}

}  // namespace cutgen
