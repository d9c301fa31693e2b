#ifndef PREFCALC_RNG_HPP
#define PREFCALC_RNG_HPP

#include <cstdint>
#include <random>

namespace prefcalc {

// Uniform double in [0,1) from the top 53 bits of the generator output.
// Used instead of std::uniform_real_distribution so that seeded runs produce
// identical trial sequences on every platform.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).
inline std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

}  // namespace prefcalc

#endif  // PREFCALC_RNG_HPP
