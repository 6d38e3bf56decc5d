#ifndef DISKLAB_SPACES_HPP
#define DISKLAB_SPACES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "blaschke.hpp"
#include "core.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "taylor.hpp"

// Norms and energies for the concrete spaces the preserver theorems
// quantify over: Hardy H^p, the Dirichlet space, and Bergman A^2, plus the
// growth-axiom check on monomials and the sup-distance probe between finite
// Blaschke products and other inner functions.

namespace disklab {

struct HpNormResult {
    double value = 0.0;
    bool monotone = true; // rung means nondecreasing within 1e-9
    std::vector<double> rung_values;
};

/// sup over the ladder of (circle mean of |f_r|^p)^{1/p}; the means are
/// nondecreasing in r (subharmonicity), which is checked on every call.
inline HpNormResult hp_norm(const Handle& f, double p, const RadialLadder& ladder,
                            const BoundaryGrid& grid) {
    if (!(p >= 1.0)) throw std::invalid_argument("hp_norm: p must be >= 1");
    HpNormResult out;
    double prev_mean = -1.0;
    for (double r : ladder.radii()) {
        double mean = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            const double la = f.log_abs(r * grid.point(j));
            mean += std::isfinite(la) ? std::exp(p * la) : 0.0;
        }
        mean /= grid.size();
        if (mean < prev_mean - 1e-9) out.monotone = false;
        prev_mean = mean;
        const double value = std::pow(mean, 1.0 / p);
        out.rung_values.push_back(value);
        out.value = std::max(out.value, value);
    }
    return out;
}

/// Parseval form of the H^2 norm.
inline double h2_norm_coeff(const TaylorSeries& f) {
    double s = 0.0;
    for (const cplx& a : f.coeffs()) s += std::norm(a);
    return std::sqrt(s);
}

/// D(f) = sum_{n>=1} n |a_n|^2 (coefficient form of (1/pi) int |f'|^2 dA).
inline double dirichlet_energy(const TaylorSeries& f) {
    double s = 0.0;
    for (int n = 1; n <= f.order(); ++n) s += n * std::norm(f.coeff(n));
    return s;
}

inline double dirichlet_norm(const TaylorSeries& f) {
    const double h2 = h2_norm_coeff(f);
    return std::sqrt(h2 * h2 + dirichlet_energy(f));
}

/// Coefficient form of the Bergman A^2 norm: sum |a_n|^2 / (n+1).
inline double bergman_a2_norm_coeff(const TaylorSeries& f) {
    double s = 0.0;
    for (int n = 0; n <= f.order(); ++n) s += std::norm(f.coeff(n)) / (n + 1.0);
    return std::sqrt(s);
}

struct SpaceNorm {
    enum class Kind { Hardy, Dirichlet, BergmanA2 };
    Kind kind = Kind::Hardy;
    double p = 2.0; // Hardy exponent, >= 1

    static SpaceNorm hardy(double p) {
        if (!(p >= 1.0)) throw std::invalid_argument("SpaceNorm: p must be >= 1");
        return {Kind::Hardy, p};
    }
    static SpaceNorm dirichlet() { return {Kind::Dirichlet, 2.0}; }
    static SpaceNorm bergman_a2() { return {Kind::BergmanA2, 2.0}; }

    /// ||z^n|| in closed form: 1 for H^p, sqrt(1+n) for Dirichlet,
    /// 1/sqrt(n+1) for Bergman A^2.
    double monomial_norm(int n) const {
        switch (kind) {
            case Kind::Hardy: return 1.0;
            case Kind::Dirichlet: return std::sqrt(1.0 + n);
            case Kind::BergmanA2: return 1.0 / std::sqrt(n + 1.0);
        }
        return 1.0;
    }

    double norm(const TaylorSeries& f, const RadialLadder& ladder, const BoundaryGrid& grid) const {
        switch (kind) {
            case Kind::Hardy:
                return (p == 2.0) ? h2_norm_coeff(f) : hp_norm(Handle(f), p, ladder, grid).value;
            case Kind::Dirichlet: return dirichlet_norm(f);
            case Kind::BergmanA2: return bergman_a2_norm_coeff(f);
        }
        return 0.0;
    }

    const char* name() const {
        switch (kind) {
            case Kind::Hardy: return "hardy";
            case Kind::Dirichlet: return "dirichlet";
            case Kind::BergmanA2: return "bergman-a2";
        }
        return "?";
    }
};

/// The sequence ||z^n||^{1/n}, n = 1..n_max. Growth axiom: the tail of the
/// sequence must settle below 1 + 5e-2 for every implemented variant.
inline std::vector<double> axiom_x3_check(const SpaceNorm& norm, int n_max) {
    if (n_max < 2) throw std::invalid_argument("axiom_x3_check: n_max must be >= 2");
    std::vector<double> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        out.push_back(std::pow(norm.monomial_norm(n), 1.0 / n));
    return out;
}

/// max_j |B - h| on the circle of radius r: a lower estimate of the sup-norm
/// distance between a finite Blaschke product and another inner function.
inline double blaschke_distance_probe(const FiniteBlaschke& B, const InnerFunction& h,
                                      const BoundaryGrid& grid, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("blaschke_distance_probe: r must be in (0,1)");
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const cplx z = r * grid.point(j);
        worst = std::max(worst, std::abs(B.eval(z) - h.eval(z)));
    }
    return worst;
}

} // namespace disklab

#endif
