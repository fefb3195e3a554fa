#include "lff/rng.hpp"

#include "lff/errors.hpp"

#include <cmath>
#include <numbers>

namespace lff {

namespace {

// splitmix64; mixes (seed, stream) into the engine seed.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(mix64(mix64(seed) + stream)) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    LFF_REQUIRE(n > 0, "uniform_index: n must be positive");
    const std::uint64_t threshold = -n % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= threshold) return x % n;
    }
}

RngStream RngStream::derive(std::uint64_t stream_id) const {
    return RngStream(seed_, mix64(stream_ + 0x51ab5e) ^ stream_id);
}

Matrix gaussian_sample(RngStream& rng, std::size_t rows, std::size_t cols, double stddev) {
    LFF_REQUIRE(stddev >= 0.0, "gaussian_sample: negative stddev");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) m.values()[i] = stddev * rng.normal();
    return m;
}

} // namespace lff
