#ifndef WARING_RNG_HPP
#define WARING_RNG_HPP

#include "waring/scalars.hpp"

#include <cstdint>

namespace waring {

// Deterministic, platform-stable generator (splitmix64). std::mt19937 with
// std::uniform_int_distribution is not byte-stable across standard
// libraries, and generated instance files must be.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]; modulo bias is irrelevant at the ranges used.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Small random rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Rat small_rat(int max_num, int max_den) {
        return Rat(static_cast<long>(uniform_int(-max_num, max_num)),
                   static_cast<long>(uniform_int(1, max_den)));
    }

    Rat nonzero_small_rat(int max_num, int max_den) {
        for (;;) {
            Rat r = small_rat(max_num, max_den);
            if (r != 0) return r;
        }
    }

    // Independent stream derived from this seed and a fixed tag.
    SeededRng child(std::uint64_t tag) const {
        SeededRng c(state_ ^ (0xa0761d6478bd642full * (tag + 1)));
        c.next();
        return c;
    }

private:
    std::uint64_t state_;
};

}  // namespace waring

#endif
