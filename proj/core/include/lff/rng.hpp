#pragma once

#include "lff/matrix.hpp"

#include <cstdint>
#include <random>

namespace lff {

/// Deterministic random stream: a seeded mt19937_64 with our own
/// Box-Muller transform on top. The engine's bit stream is fixed by the
/// standard, and we avoid std::normal_distribution (whose output is
/// implementation-defined), so a seed pins the full sample sequence.
///
/// Streams are value types; derive() forks an independent substream for
/// a named purpose without perturbing the parent.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller (pairs generated, one cached).
    double normal();
    /// Unbiased integer in [0, n); n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Independent substream keyed by (seed, stream_id); deterministic.
    RngStream derive(std::uint64_t stream_id) const;

private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// i.i.d. N(0, stddev^2) entries. stddev = 0 yields the exact zero matrix.
Matrix gaussian_sample(RngStream& rng, std::size_t rows, std::size_t cols, double stddev);

} // namespace lff
