#include "gorenstein/random.hpp"

#include <stdexcept>

namespace gorenstein {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ull)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Scalar Rng::uniform(const Field& f) {
    if (!f.is_prime()) {
        // Small integers keep rational test fixtures readable.
        return Scalar(f, static_cast<long long>(below(201)) - 100);
    }
    return Scalar::from_residue(f, below(f.characteristic()));
}

Scalar Rng::uniform_nonzero(const Field& f) {
    for (;;) {
        Scalar s = uniform(f);
        if (!s.is_zero()) return s;
    }
}

}  // namespace gorenstein
