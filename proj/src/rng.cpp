#include "qbfac/rng.hpp"

#include <cmath>
#include <numbers>

namespace qbfac {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct SplitMix64 {
    std::uint64_t x;
    std::uint64_t next() {
        std::uint64_t z = (x += kGolden);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    SplitMix64 sm{seed};
    std::uint64_t base = sm.next();
    SplitMix64 sm2{base + stream * kGolden};
    for (auto& s : state_) s = sm2.next();
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256**
    std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_gaussian_;
    }
    // u1 in (0,1] so log stays finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

RngStream RngStream::substream(std::uint64_t id) const {
    return RngStream(seed_, stream_ + 1 + id);
}

DenseMatrix gaussian(index rows, index cols, RngStream& rng) {
    if (rows == 0 || cols == 0)
        throw DimensionError("gaussian: dimensions must be at least 1");
    DenseMatrix m(rows, cols);
    double* p = m.data();
    for (index i = 0; i < rows * cols; ++i) p[i] = rng.next_gaussian();
    return m;
}

}  // namespace qbfac
