#pragma once

#include <complex>
#include <vector>

namespace lff {

/// Unnormalized DFT of a real signal, X_k = sum_j c_j e^{+2*pi*i*j*k/n}.
/// The positive exponent matches the circulant eigenvalue convention used
/// throughout the kernel analysis; there is no 1/n factor.
///
/// Dispatches to a radix-2 FFT when n is a power of two, otherwise a
/// direct O(n^2) sum. dft_real_direct is always the plain sum and doubles
/// as the FFT oracle in tests.
std::vector<std::complex<double>> dft_real(const std::vector<double>& signal);

std::vector<std::complex<double>> dft_real_direct(const std::vector<double>& signal);

bool is_power_of_two(std::size_t n);

} // namespace lff
