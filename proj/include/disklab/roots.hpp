#ifndef DISKLAB_ROOTS_HPP
#define DISKLAB_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"

// Dense polynomial utilities and a Durand-Kerner root finder with Newton
// polishing. Degrees stay small (a few dozen), so simultaneous iteration is
// plenty; callers accept roots by residual, never by trust in the iteration.

namespace disklab {

/// Coefficients in ascending degree order.
using Poly = std::vector<cplx>;

inline cplx poly_eval(std::span<const cplx> p, cplx z) {
    cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {cplx(0.0)};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<double>(i);
    return out;
}

struct RootResult {
    std::vector<cplx> roots;
    bool converged = false;
    double max_residual = 0.0; // max |p(root)| over accepted roots
};

/// All complex roots of p (degree = index of the last nonzero coefficient).
/// Durand-Kerner simultaneous iteration followed by Newton polish.
inline RootResult polynomial_roots(const Poly& p_in) {
    Poly p = p_in;
    double scale = 0.0;
    for (const cplx& c : p) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");
    while (p.size() > 1 && std::abs(p.back()) <= 1e-300 * scale) p.pop_back();
    const int deg = static_cast<int>(p.size()) - 1;
    RootResult result;
    if (deg == 0) {
        result.converged = true;
        return result;
    }

    // monic copy
    Poly m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = p[i] / p.back();

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(m[i]));
    radius = 1.0 + radius; // Cauchy bound

    std::vector<cplx> z(deg);
    const cplx b(0.4, 0.9); // asymmetric start, standard for DK
    cplx w = 0.5 * radius;
    for (int i = 0; i < deg; ++i) {
        z[i] = w;
        w *= b;
    }

    const int max_iter = 600;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        double step = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == cplx(0.0)) {
                z[i] += cplx(1e-8, 1e-8); // split coincident iterates
                continue;
            }
            const cplx dz = poly_eval(m, z[i]) / denom;
            z[i] -= dz;
            step = std::max(step, std::abs(dz));
        }
        if (step < 1e-14 * (1.0 + radius)) {
            converged = true;
            break;
        }
    }

    // Newton polish on the original polynomial
    const Poly dp = poly_derivative(p);
    for (int i = 0; i < deg; ++i) {
        for (int it = 0; it < 3; ++it) {
            const cplx fv = poly_eval(p, z[i]);
            const cplx dv = poly_eval(dp, z[i]);
            if (std::abs(dv) < 1e-300) break;
            const cplx dz = fv / dv;
            if (!(std::abs(dz) < 1.0)) break; // diverging step, keep DK value
            z[i] -= dz;
        }
        result.max_residual = std::max(result.max_residual, std::abs(poly_eval(p, z[i])) / scale);
    }
    result.roots = std::move(z);
    result.converged = converged;
    return result;
}

} // namespace disklab

#endif
