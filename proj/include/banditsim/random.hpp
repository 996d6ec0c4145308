#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace banditsim {

// splitmix64 finalizer; decorrelates nearby seeds and drives child-stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Child stream seed for (master seed, tag, index), e.g. tag = policy id and
// index = replication number. Pure function of its inputs, so any run is
// reproducible from the master seed alone.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    return mix64(mix64(master ^ fnv1a64(tag)) ^ index);
}

// Deterministic Gaussian stream.
//
// The bit source is std::mt19937_64 (fully specified by the standard) and the
// normal transform is the trigonometric Box-Muller form, implemented here
// because std::normal_distribution is implementation-defined. Every gaussian()
// call consumes exactly two engine words, so the n-th variate of a stream is
// identical on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    // One standard-normal draw.
    double gaussian() {
        ++gaussian_count_;
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;          // [0,1)
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    // Number of gaussian() calls so far; lets tests pin down per-operation draw counts.
    std::uint64_t gaussian_count() const { return gaussian_count_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t gaussian_count_ = 0;
};

}  // namespace banditsim
