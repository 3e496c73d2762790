#include "ordwalk/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordwalk {

Ordinal Sampler::ordinal_below(const Ordinal& bound) {
    if (bound.is_zero()) throw std::domain_error("ordinal_below: empty range");
    for (int tries = 0; tries < 4096; ++tries) {
        Ordinal o;
        for (int e = 3; e >= 0; --e) {
            if (pick(2) == 0) continue; // skip this exponent half the time
            std::uint64_t c = 1 + pick(4);
            o = o + Ordinal::omega_pow(Ordinal::nat(static_cast<std::uint64_t>(e)), c);
        }
        if (o < bound) return o;
    }
    // bound smaller than the generator's typical range: fall back to naturals
    auto n = bound.as_nat();
    if (n) return Ordinal::nat(pick(*n));
    return Ordinal();
}

OrdTuple Sampler::nondecreasing_tuple(std::size_t len, const Ordinal& bound) {
    OrdTuple t;
    for (std::size_t i = 0; i < len; ++i) t.push_back(ordinal_below(bound));
    std::sort(t.begin(), t.end());
    return t;
}

OrdTuple Sampler::strictly_increasing_tuple(std::size_t len, const Ordinal& bound) {
    for (int tries = 0; tries < 4096; ++tries) {
        OrdTuple t = nondecreasing_tuple(len, bound);
        if (is_strictly_increasing(t)) return t;
    }
    throw std::domain_error("strictly_increasing_tuple: range too small");
}

} // namespace ordwalk
