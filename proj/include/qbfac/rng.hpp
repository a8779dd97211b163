#pragma once

#include <cstdint>

#include "qbfac/dense_matrix.hpp"
#include "qbfac/types.hpp"

namespace qbfac {

/// Deterministic random stream: xoshiro256** seeded through SplitMix64.
///
/// The integer sequence is a pure function of (seed, stream id), identical
/// across runs and platforms. Gaussian draws use the trigonometric
/// Box-Muller transform with a one-value cache carried in the stream state,
/// so matrix fills and scalar draws share one well-defined consumption order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    /// Uniform on [0, 1), 53-bit resolution.
    double next_double();
    /// Standard normal draw.
    double next_gaussian();

    /// Independent stream derived from the same seed.
    RngStream substream(std::uint64_t id) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t state_[4] = {};
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

/// rows x cols matrix of i.i.d. standard normal entries, filled in
/// column-major order from `rng`.
DenseMatrix gaussian(index rows, index cols, RngStream& rng);

}  // namespace qbfac
