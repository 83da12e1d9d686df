#ifndef QDKERR_RNG_HPP
#define QDKERR_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace qdkerr {

// splitmix64 finalizer, used to decorrelate seeds and derive substreams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for the statistically independent substream `stream` of a base seed.
// Parallel and serial evaluations of per-stream work agree bit-for-bit.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 1));
}

// Deterministic random stream. mt19937_64 is fully specified by the standard;
// the uniform and Gaussian transforms below are pinned here instead of using
// std::*_distribution, whose algorithms are implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one variate per call, no cached spare).
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 eng_;
};

} // namespace qdkerr

#endif
