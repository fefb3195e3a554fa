#include "lff/dft.hpp"

#include "lff/errors.hpp"

#include <cmath>
#include <numbers>

namespace lff {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<std::complex<double>> dft_real_direct(const std::vector<double>& signal) {
    LFF_REQUIRE(!signal.empty(), "dft_real: empty signal");
    const std::size_t n = signal.size();
    std::vector<std::complex<double>> out(n);
    const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // e^{+i*w*j*k}; reduce j*k mod n before the trig call so large
            // n*k products do not lose precision.
            const double ang = w * static_cast<double>((j * k) % n);
            re += signal[j] * std::cos(ang);
            im += signal[j] * std::sin(ang);
        }
        out[k] = {re, im};
    }
    return out;
}

namespace {

// Iterative radix-2, positive exponent, no normalization.
void fft_pow2_inplace(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

std::vector<std::complex<double>> dft_real(const std::vector<double>& signal) {
    LFF_REQUIRE(!signal.empty(), "dft_real: empty signal");
    if (!is_power_of_two(signal.size()) || signal.size() < 32)
        return dft_real_direct(signal);
    std::vector<std::complex<double>> a(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) a[i] = {signal[i], 0.0};
    fft_pow2_inplace(a);
    return a;
}

} // namespace lff
