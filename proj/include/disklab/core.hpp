#ifndef DISKLAB_CORE_HPP
#define DISKLAB_CORE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

// Shared unit-disk primitives: points of the disk and circle, uniform
// boundary grids, radial ladders, Moebius transforms and circle quadrature.

namespace disklab {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// A point of the open unit disk; construction rejects |z| >= 1.
class DiskPoint {
public:
    explicit DiskPoint(cplx v) : v_(v) {
        if (!(std::abs(v) < 1.0))
            throw std::invalid_argument("DiskPoint: |z| must be < 1, got |z| = " +
                                        std::to_string(std::abs(v)));
    }
    cplx value() const { return v_; }

private:
    cplx v_;
};

/// A point of the unit circle. Input must already be unimodular to within
/// 1e-14; the stored value is renormalized to exact unit modulus.
class UnimodularConstant {
public:
    UnimodularConstant() : v_(1.0, 0.0) {}
    explicit UnimodularConstant(cplx v) {
        const double m = std::abs(v);
        if (std::abs(m - 1.0) > 1e-14)
            throw std::invalid_argument("UnimodularConstant: ||c|-1| = " +
                                        std::to_string(std::abs(m - 1.0)) + " exceeds 1e-14");
        v_ = v / m;
    }
    /// Rescales an arbitrary nonzero value onto the circle first.
    static UnimodularConstant normalizing(cplx v) {
        const double m = std::abs(v);
        if (!(m > 0.0))
            throw std::invalid_argument("UnimodularConstant: cannot normalize zero");
        return UnimodularConstant(v / m);
    }
    cplx value() const { return v_; }

private:
    cplx v_;
};

/// Uniform grid t_j = 2*pi*j/n on the circle. Angles are derived from n,
/// never stored.
class BoundaryGrid {
public:
    explicit BoundaryGrid(int n) : n_(n) {
        if (n < 8) throw std::invalid_argument("BoundaryGrid: n must be >= 8");
    }
    int size() const { return n_; }
    double angle(int j) const { return two_pi * static_cast<double>(j) / n_; }
    cplx point(int j) const { return std::polar(1.0, angle(j)); }

private:
    int n_;
};

/// Strictly increasing radii in (0,1), used for radial-limit approximation.
class RadialLadder {
public:
    explicit RadialLadder(std::vector<double> radii) : radii_(std::move(radii)) {
        if (radii_.empty()) throw std::invalid_argument("RadialLadder: empty");
        double prev = 0.0;
        for (double r : radii_) {
            if (!(r > prev && r < 1.0))
                throw std::invalid_argument("RadialLadder: radii must be strictly increasing in (0,1)");
            prev = r;
        }
    }
    /// r_k = 1 - 2^{-k}, k = 1..kmax.
    static RadialLadder dyadic(int kmax = 20) {
        std::vector<double> radii;
        radii.reserve(kmax);
        for (int k = 1; k <= kmax; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));
        return RadialLadder(std::move(radii));
    }
    const std::vector<double>& radii() const { return radii_; }
    double back() const { return radii_.back(); }
    std::size_t size() const { return radii_.size(); }

private:
    std::vector<double> radii_;
};

/// phi_a(z) = (a - z)/(1 - conj(a) z); maps the disk onto itself and the
/// circle onto itself, and is an involution.
inline cplx mobius_eval(const DiskPoint& a, cplx z) {
    const cplx av = a.value();
    return (av - z) / (1.0 - std::conj(av) * z);
}

/// Rectangle-rule mean, i.e. (1/2pi) \int on a uniform grid.
template <class T>
T circle_mean(std::span<const T> samples) {
    if (samples.empty()) throw std::invalid_argument("circle_mean: empty sample sequence");
    T acc{};
    for (const T& s : samples) acc += s;
    return acc / static_cast<double>(samples.size());
}

inline cplx circle_mean(const std::vector<cplx>& samples) {
    return circle_mean(std::span<const cplx>(samples));
}
inline double circle_mean(const std::vector<double>& samples) {
    return circle_mean(std::span<const double>(samples));
}

/// Samples f on the circle of radius r: f(r e^{i t_j}), j = 0..n-1.
template <class F>
std::vector<cplx> radial_trace(F&& f, const BoundaryGrid& grid, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radial_trace: r must be in (0,1)");
    std::vector<cplx> out(grid.size());
    for (int j = 0; j < grid.size(); ++j) out[j] = f(r * grid.point(j));
    return out;
}

/// Deterministic index-parallel loop; each index writes only its own slot.
/// threads <= 1 runs serially.
template <class F>
void parallel_for(int n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    const int nt = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace disklab

#endif
