#ifndef DISKLAB_FOURIER_HPP
#define DISKLAB_FOURIER_HPP

#include <bit>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"

// Discrete Fourier analysis on uniform circle grids. Radix-2 FFT for
// power-of-two sizes, direct summation otherwise (grids are small).

namespace disklab {

namespace detail {

inline void fft_radix2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 1.0 : -1.0) * two_pi / static_cast<double>(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

} // namespace detail

/// c_m = (1/n) sum_j samples_j e^{-i m t_j} for m = 0..n-1 (m > n/2 alias to
/// negative frequencies as usual).
inline std::vector<cplx> fourier_coefficients(std::span<const cplx> samples) {
    const std::size_t n = samples.size();
    if (n == 0) throw std::invalid_argument("fourier_coefficients: empty input");
    std::vector<cplx> a(samples.begin(), samples.end());
    if (std::has_single_bit(n)) {
        detail::fft_radix2(a, false);
        for (auto& x : a) x /= static_cast<double>(n);
        return a;
    }
    std::vector<cplx> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc = 0.0;
        const cplx w = std::polar(1.0, -two_pi * static_cast<double>(m) / static_cast<double>(n));
        cplx wk(1.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            acc += a[j] * wk;
            wk *= w;
        }
        out[m] = acc / static_cast<double>(n);
    }
    return out;
}

inline std::vector<cplx> fourier_coefficients(std::span<const double> samples) {
    std::vector<cplx> tmp(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) tmp[j] = samples[j];
    return fourier_coefficients(std::span<const cplx>(tmp));
}

} // namespace disklab

#endif
