#ifndef DISKLAB_INNER_HPP
#define DISKLAB_INNER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blaschke.hpp"
#include "core.hpp"
#include "function.hpp"
#include "taylor.hpp"

// Atomic singular inner functions and the canonical inner type h = B*S.
// Divisibility is decided exactly on the canonical data (zero multisets and
// atom masses); the boundary-mean machinery estimates singular mass from
// samples alone, which is what the Frostman scan needs.

namespace disklab {

struct Atom {
    double angle; // in [0, 2pi)
    double mass;  // > 0
};

inline double poisson_kernel(double r, double theta) {
    const double denom = 1.0 - 2.0 * r * std::cos(theta) + r * r;
    return (1.0 - r * r) / denom;
}

inline double angular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

/// Finite positive atomic measure on the circle. Atoms are angle-sorted and
/// merged when angles coincide to within 1e-12.
class SingularMeasure {
public:
    SingularMeasure() = default;
    explicit SingularMeasure(std::vector<Atom> atoms) {
        for (Atom& a : atoms) {
            if (!(a.mass > 0.0))
                throw std::invalid_argument("SingularMeasure: masses must be strictly positive");
            a.angle = std::fmod(a.angle, two_pi);
            if (a.angle < 0.0) a.angle += two_pi;
        }
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
        for (const Atom& a : atoms) {
            if (!atoms_.empty() && angular_distance(atoms_.back().angle, a.angle) <= 1e-12)
                atoms_.back().mass += a.mass;
            else
                atoms_.push_back(a);
        }
        // wraparound merge (first vs last)
        if (atoms_.size() > 1 &&
            angular_distance(atoms_.front().angle, atoms_.back().angle) <= 1e-12) {
            atoms_.front().mass += atoms_.back().mass;
            atoms_.pop_back();
        }
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    double total_mass() const {
        double s = 0.0;
        for (const Atom& a : atoms_) s += a.mass;
        return s;
    }
    SingularMeasure plus(const SingularMeasure& other) const {
        std::vector<Atom> all = atoms_;
        all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
        return SingularMeasure(std::move(all));
    }
    SingularMeasure scaled(double k) const {
        if (k == 0.0) return SingularMeasure();
        std::vector<Atom> all = atoms_;
        for (Atom& a : all) a.mass *= k;
        return SingularMeasure(std::move(all));
    }

private:
    std::vector<Atom> atoms_;
};

/// S(z) = exp(-sum_j sigma_j (e^{it_j}+z)/(e^{it_j}-z)); identically 1 for
/// the empty measure.
class SingularInner {
public:
    SingularInner() = default;
    explicit SingularInner(SingularMeasure mu) : mu_(std::move(mu)) {}

    const SingularMeasure& measure() const { return mu_; }
    bool trivial() const { return mu_.empty(); }

    cplx herglotz_exponent(cplx z) const {
        cplx acc = 0.0;
        for (const Atom& a : mu_.atoms()) {
            const cplx e = std::polar(1.0, a.angle);
            acc += a.mass * (e + z) / (e - z);
        }
        return acc;
    }
    cplx eval(cplx z) const { return std::exp(-herglotz_exponent(z)); }
    double log_abs(cplx z) const { return -herglotz_exponent(z).real(); }

    TaylorSeries taylor(int order) const {
        if (mu_.empty()) return TaylorSeries::constant(1.0);
        // exponent -sigma_tot - 2 sum_j sigma_j e^{-imt_j} z^m
        std::vector<cplx> e(static_cast<std::size_t>(order) + 1, cplx(0.0));
        e[0] = -mu_.total_mass();
        for (int m = 1; m <= order; ++m) {
            cplx acc = 0.0;
            for (const Atom& a : mu_.atoms()) acc += a.mass * std::polar(1.0, -m * a.angle);
            e[m] = -2.0 * acc;
        }
        return taylor_exp(TaylorSeries(std::move(e)), order);
    }

private:
    SingularMeasure mu_;
};

/// Canonical inner function h = B*S; the pair (zero multiset + constant,
/// atom list) determines it uniquely.
class InnerFunction {
public:
    InnerFunction() = default; // the constant 1
    InnerFunction(FiniteBlaschke b, SingularMeasure mu)
        : b_(std::move(b)), s_(std::move(mu)) {}
    explicit InnerFunction(FiniteBlaschke b) : b_(std::move(b)) {}
    explicit InnerFunction(SingularMeasure mu) : s_(std::move(mu)) {}

    const FiniteBlaschke& blaschke() const { return b_; }
    const SingularMeasure& measure() const { return s_.measure(); }
    const SingularInner& singular() const { return s_; }
    bool is_finite_blaschke() const { return s_.trivial(); }
    bool is_unimodular_constant() const { return b_.is_constant() && s_.trivial(); }

    cplx eval(cplx z) const { return b_.eval(z) * s_.eval(z); }
    double log_abs(cplx z) const { return b_.log_abs(z) + s_.log_abs(z); }

    TaylorSeries taylor(int order) const {
        TaylorSeries bt = b_.taylor(order);
        if (s_.trivial()) return bt;
        return taylor_mul(bt, s_.taylor(order), order);
    }

    InnerFunction product(const InnerFunction& other) const {
        return InnerFunction(b_.product(other.b_), s_.measure().plus(other.s_.measure()));
    }
    InnerFunction pow(int k) const {
        InnerFunction acc;
        for (int i = 0; i < k; ++i) acc = acc.product(*this);
        return acc;
    }

private:
    FiniteBlaschke b_;
    SingularInner s_;
};

// ---------------------------------------------------------------------------
// Exact divisibility on canonical data (the discrete form of the measure
// inequality mu_1 - mu_0 >= 0).

struct DivisibilityCertificate {
    bool divides = false;
    bool ambiguous_pairing = false;       // two distinct zero candidates within tolerance
    std::vector<cplx> zero_deficits;      // zeros of h0 with no partner in h1
    std::vector<Atom> mass_deficits;      // atoms of h0 short by Atom::mass in h1
    std::vector<int> matched_zero_of_h1;  // internal: index into h1 zeros per h0 zero, -1 if none
};

inline DivisibilityCertificate inner_divides(const InnerFunction& h0, const InnerFunction& h1,
                                             double zero_tol = 1e-10, double mass_tol = 1e-12) {
    DivisibilityCertificate cert;
    const auto& z0 = h0.blaschke().zeros();
    const auto& z1 = h1.blaschke().zeros();
    std::vector<bool> used(z1.size(), false);
    cert.matched_zero_of_h1.assign(z0.size(), -1);
    for (std::size_t i = 0; i < z0.size(); ++i) {
        int best = -1, second = -1;
        double bestd = std::numeric_limits<double>::infinity(), secondd = bestd;
        for (std::size_t j = 0; j < z1.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z0[i] - z1[j]);
            if (d < bestd) {
                second = best;
                secondd = bestd;
                best = static_cast<int>(j);
                bestd = d;
            } else if (d < secondd) {
                second = static_cast<int>(j);
                secondd = d;
            }
        }
        if (best >= 0 && bestd <= zero_tol) {
            used[best] = true;
            cert.matched_zero_of_h1[i] = best;
            if (second >= 0 && secondd <= zero_tol && std::abs(z1[best] - z1[second]) > 0.0)
                cert.ambiguous_pairing = true;
        } else {
            cert.zero_deficits.push_back(z0[i]);
        }
    }
    for (const Atom& a : h0.measure().atoms()) {
        double found = 0.0;
        for (const Atom& b : h1.measure().atoms()) {
            if (angular_distance(a.angle, b.angle) <= 1e-12) {
                found = b.mass;
                break;
            }
        }
        if (found < a.mass - mass_tol) cert.mass_deficits.push_back({a.angle, a.mass - found});
    }
    cert.divides = cert.zero_deficits.empty() && cert.mass_deficits.empty();
    return cert;
}

struct QuotientError : std::runtime_error {
    QuotientError(const std::string& msg, DivisibilityCertificate c)
        : std::runtime_error(msg), certificate(std::move(c)) {}
    DivisibilityCertificate certificate;
};

/// h1/h0 in canonical form; requires inner_divides(h0,h1). The result is
/// verified pointwise (quotient * h0 == h1 to 1e-9 at 32 pseudorandom
/// points).
inline InnerFunction inner_quotient(const InnerFunction& h0, const InnerFunction& h1,
                                    double verify_tol = 1e-9) {
    DivisibilityCertificate cert = inner_divides(h0, h1);
    if (!cert.divides)
        throw QuotientError("inner_quotient: h0 does not divide h1", std::move(cert));

    const auto& z1 = h1.blaschke().zeros();
    std::vector<bool> remove(z1.size(), false);
    for (int j : cert.matched_zero_of_h1)
        if (j >= 0) remove[j] = true;
    std::vector<cplx> qz;
    for (std::size_t j = 0; j < z1.size(); ++j)
        if (!remove[j]) qz.push_back(z1[j]);

    std::vector<Atom> qa;
    for (const Atom& b : h1.measure().atoms()) {
        double sub = 0.0;
        for (const Atom& a : h0.measure().atoms())
            if (angular_distance(a.angle, b.angle) <= 1e-12) sub = a.mass;
        const double rest = b.mass - sub;
        if (rest > 1e-12) qa.push_back({b.angle, rest});
    }

    const cplx qc = h1.blaschke().constant() / h0.blaschke().constant();
    InnerFunction q(FiniteBlaschke(UnimodularConstant::normalizing(qc), std::move(qz)),
                    SingularMeasure(std::move(qa)));

    std::mt19937_64 rng(0x71a5u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 32; ++i) {
        const cplx z = std::polar(0.9 * std::sqrt(uni(rng)), two_pi * uni(rng));
        const double err = std::abs(q.eval(z) * h0.eval(z) - h1.eval(z));
        if (!(err < verify_tol))
            throw QuotientError("inner_quotient: pointwise verification failed, |error| = " +
                                    std::to_string(err),
                                std::move(cert));
    }
    return q;
}

// Discrete core of the quotient lemma: the affine family mu_0 + k(mu_1-mu_0)
// stays nonnegative for all k iff mu_1 >= mu_0 componentwise.
inline bool componentwise_ge(std::span<const double> mu1, std::span<const double> mu0) {
    if (mu1.size() != mu0.size()) throw std::invalid_argument("componentwise_ge: size mismatch");
    for (std::size_t i = 0; i < mu1.size(); ++i)
        if (mu1[i] < mu0[i]) return false;
    return true;
}

inline bool affine_family_nonneg(std::span<const double> mu0, std::span<const double> mu1,
                                 int kmax) {
    if (mu1.size() != mu0.size()) throw std::invalid_argument("affine_family_nonneg: size mismatch");
    for (int k = 0; k <= kmax; ++k)
        for (std::size_t i = 0; i < mu0.size(); ++i)
            if (mu0[i] + static_cast<double>(k) * (mu1[i] - mu0[i]) < 0.0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Boundary means and singular-mass estimation.

/// True where a grid point sits inside an atom arc: the predicted modulus
/// deficit 1 - exp(-sum sigma P_r) exceeds eps, or the point coincides with
/// an atom angle.
inline bool atom_arc_excluded(const SingularMeasure& mu, double r, double theta, double eps) {
    if (mu.empty()) return false;
    double p = 0.0;
    for (const Atom& a : mu.atoms()) {
        if (angular_distance(theta, a.angle) < 1e-9) return true;
        p += a.mass * poisson_kernel(r, theta - a.angle);
    }
    return -std::expm1(-p) > eps;
}

struct BoundaryResidual {
    double residual = 0.0; // max | |h| - 1 |
    double excess = 0.0;   // max ( |h| - 1 )+ : positive values violate the maximum principle
    int excluded = 0;
};

/// max_j ||h(r e^{it_j})| - 1| over grid points outside the atom arcs of
/// `exclusion` (pass nullptr for no exclusion). r = 1 is allowed for
/// canonical data, whose boundary formulas are exact off the atoms. The
/// excess field isolates the |h| > 1 side: an inner function stays below 1
/// inside the disk, so excess is a refutation signal on its own.
inline BoundaryResidual boundary_unimodularity_residual(const Handle& h,
                                                        const SingularMeasure* exclusion,
                                                        double r, const BoundaryGrid& grid,
                                                        double arc_eps = 1e-4) {
    BoundaryResidual out;
    for (int j = 0; j < grid.size(); ++j) {
        const double t = grid.angle(j);
        if (exclusion && atom_arc_excluded(*exclusion, r, t, arc_eps)) {
            ++out.excluded;
            continue;
        }
        const double la = h.log_abs(r * grid.point(j));
        const double dev = std::isfinite(la) ? std::expm1(la) : -1.0;
        out.residual = std::max(out.residual, std::abs(dev));
        out.excess = std::max(out.excess, dev);
    }
    return out;
}

struct JensenSampleError : std::runtime_error {
    JensenSampleError(double angle_, double radius_)
        : std::runtime_error("jensen_mean: |f| vanishes at grid angle " + std::to_string(angle_) +
                             " on radius " + std::to_string(radius_) +
                             "; perturb r or refine the grid"),
          angle(angle_), radius(radius_) {}
    double angle;
    double radius;
};

/// Mean of log|f| over the grid on the circle of radius r. Rejects samples
/// whose log-modulus is not finite (generic handles report -inf below the
/// 1e-300 floor).
inline double jensen_mean(const Handle& f, double r, const BoundaryGrid& grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("jensen_mean: r must be in (0,1)");
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double la = f.log_abs(r * grid.point(j));
        if (!std::isfinite(la)) throw JensenSampleError(grid.angle(j), r);
        acc += la;
    }
    return acc / grid.size();
}

struct MassEstimate {
    double estimate = 0.0;
    bool reliable = true;
    std::vector<std::pair<double, double>> rung_means; // (r, mean) over usable rungs
};

struct EstimatorOptions {
    double alias_cutoff = 1e-6; // keep rungs with r^n below this
    double monotone_tol = 1e-8;
    double bound_tol = 1e-8; // tolerated log|f| excess over 0
};

/// Singular mass of an inner candidate: minus the extrapolated limit of the
/// Jensen means. Rungs too close to the boundary for the grid (r^n above
/// the alias cutoff) are dropped; the remaining tail is Richardson
/// extrapolated linearly in (1-r).
inline MassEstimate singular_mass_estimate(const Handle& f, const RadialLadder& ladder,
                                           const BoundaryGrid& grid,
                                           const EstimatorOptions& opts = {}) {
    const double n = grid.size();
    std::vector<double> usable;
    for (double r : ladder.radii())
        if (n * std::log(r) <= std::log(opts.alias_cutoff)) usable.push_back(r);
    if (usable.size() < 2)
        throw std::invalid_argument(
            "singular_mass_estimate: fewer than two ladder rungs are resolvable at this grid "
            "size; refine the grid or extend the ladder downward");

    MassEstimate out;
    double max_la = -std::numeric_limits<double>::infinity();
    for (double r : usable) {
        for (int j = 0; j < grid.size(); ++j)
            max_la = std::max(max_la, f.log_abs(r * grid.point(j)));
        out.rung_means.emplace_back(r, jensen_mean(f, r, grid));
    }
    if (max_la > opts.bound_tol)
        throw std::invalid_argument("singular_mass_estimate: |f| exceeds 1 on a sampled circle "
                                    "(log|f| = " + std::to_string(max_la) + ")");

    for (std::size_t i = 1; i < out.rung_means.size(); ++i)
        if (out.rung_means[i].second < out.rung_means[i - 1].second - opts.monotone_tol)
            out.reliable = false;

    const auto& [r2, m2] = out.rung_means[out.rung_means.size() - 1];
    const auto& [r1, m1] = out.rung_means[out.rung_means.size() - 2];
    const double x2 = 1.0 - r2, x1 = 1.0 - r1;
    const double limit = m2 + (m2 - m1) * x2 / (x1 - x2);
    out.estimate = -limit;
    return out;
}

/// phi_a composed with an inner function, with an exact log-modulus even
/// where the inner value underflows.
class FrostmanShift {
public:
    FrostmanShift(cplx a, InnerFunction h) : a_(a), h_(std::move(h)) {
        if (!(std::abs(a) < 1.0)) throw std::invalid_argument("FrostmanShift: |a| must be < 1");
    }
    cplx eval(cplx z) const {
        const cplx w = h_.eval(z);
        return (a_ - w) / (1.0 - std::conj(a_) * w);
    }
    double log_abs(cplx z) const {
        if (std::abs(a_) < 1e-14) return h_.log_abs(z); // phi_0 = -h
        const cplx w = h_.eval(z);
        if (std::abs(w) > 1e-200)
            return std::log(std::abs(a_ - w)) - std::log(std::abs(1.0 - std::conj(a_) * w));
        return std::log(std::abs(a_));
    }

private:
    cplx a_;
    InnerFunction h_;
};

struct FrostmanPoint {
    cplx a;
    MassEstimate mass;
    bool exceeds = false;
};

struct FrostmanOptions {
    double threshold = 5e-2;
    int threads = 1;
    EstimatorOptions estimator;
};

/// Estimated singular mass of phi_a o h over a grid of shift points a.
/// Deterministic output order regardless of thread count.
inline std::vector<FrostmanPoint> frostman_scan(const InnerFunction& h, std::span<const cplx> a_grid,
                                                const RadialLadder& ladder, const BoundaryGrid& grid,
                                                const FrostmanOptions& opts = {}) {
    if (h.is_unimodular_constant())
        throw std::invalid_argument("frostman_scan: h must be nonconstant");
    std::vector<FrostmanPoint> out(a_grid.size());
    std::exception_ptr failure;
    parallel_for(static_cast<int>(a_grid.size()), opts.threads, [&](int i) {
        try {
            Handle shifted{FrostmanShift(a_grid[i], h)};
            MassEstimate est = singular_mass_estimate(shifted, ladder, grid, opts.estimator);
            out[i] = {a_grid[i], est, est.estimate > opts.threshold};
        } catch (...) {
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace disklab

#endif
