#ifndef DISKLAB_OUTER_HPP
#define DISKLAB_OUTER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "fourier.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "taylor.hpp"

// Outer functions from boundary log-modulus samples, inner-outer splitting
// of sampled functions, and the Smirnov-class diagnostic.

namespace disklab {

/// Positive boundary data G_j on a uniform grid; stored as log G.
class BoundaryModulus {
public:
    BoundaryModulus(BoundaryGrid grid, std::vector<double> log_values)
        : grid_(grid), log_(std::move(log_values)) {
        if (static_cast<int>(log_.size()) != grid_.size())
            throw std::invalid_argument("BoundaryModulus: sample count does not match grid");
        for (double v : log_)
            if (!std::isfinite(v))
                throw std::invalid_argument("BoundaryModulus: log G must be finite (G > 0)");
    }
    static BoundaryModulus from_values(BoundaryGrid grid, std::span<const double> values) {
        std::vector<double> lg(values.size());
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (!(values[j] > 0.0))
                throw std::invalid_argument("BoundaryModulus: values must be strictly positive");
            lg[j] = std::log(values[j]);
        }
        return BoundaryModulus(grid, std::move(lg));
    }
    const BoundaryGrid& grid() const { return grid_; }
    const std::vector<double>& log_values() const { return log_; }

private:
    BoundaryGrid grid_;
    std::vector<double> log_;
};

/// g(z) = exp(Herglotz integral of log G). Evaluation goes through the
/// analytic log-series log g(z) = c_0 + 2 sum_{m<n/2} c_m z^m with c_m the
/// grid Fourier coefficients of log G; this agrees with the discrete
/// Herglotz sum up to its own aliasing tail and stays usable on the test
/// circles close to the boundary.
class OuterFunction {
public:
    explicit OuterFunction(const BoundaryModulus& data)
        : n_(data.grid().size()), log_values_(data.log_values()) {
        const auto coeffs = fourier_coefficients(std::span<const double>(log_values_));
        const int M = n_ / 2;
        series_.resize(M);
        series_[0] = coeffs[0].real(); // mean of real data
        for (int m = 1; m < M; ++m) series_[m] = 2.0 * coeffs[m];
    }

    int grid_size() const { return n_; }
    const std::vector<double>& log_values() const { return log_values_; }

    cplx log_eval(cplx z) const {
        if (!(std::abs(z) <= 1.0)) throw std::invalid_argument("OuterFunction: |z| must be <= 1");
        cplx acc = 0.0;
        for (std::size_t i = series_.size(); i-- > 0;) acc = acc * z + series_[i];
        return acc;
    }
    cplx eval(cplx z) const { return std::exp(log_eval(z)); }
    double log_abs(cplx z) const { return log_eval(z).real(); }
    /// g(0) = exp(mean log G), real and positive.
    double value_at_zero() const { return std::exp(series_[0].real()); }

    TaylorSeries taylor(int order) const {
        std::vector<cplx> e(static_cast<std::size_t>(order) + 1, cplx(0.0));
        for (std::size_t m = 0; m < series_.size() && m < e.size(); ++m) e[m] = series_[m];
        return taylor_exp(TaylorSeries(std::move(e)), order);
    }

private:
    int n_;
    std::vector<double> log_values_;
    std::vector<cplx> series_; // [c_0, 2c_1, 2c_2, ...]
};

inline OuterFunction outer_from_modulus(const BoundaryModulus& data) {
    return OuterFunction(data);
}

struct FactorizeOptions {
    int grid_n = 4096;
    double sample_r = 1.0 - 1e-6; // boundary surrogate for |f|
    double test_r = 1.0 - 1e-4;   // circle on which the inner residual is read
    double min_modulus = 1e-8;    // reject boundary samples below this
};

struct Factorization {
    OuterFunction outer;
    double inner_residual = 0.0; // max | |f/outer| - 1 | on the test circle
    Handle inner;
};

/// Inner-outer split of a sampled function: the outer part is built from
/// |f| on a circle just inside the boundary, the inner handle is f/outer.
/// For Smirnov-class f the residual is small; far outside it is not.
inline Factorization factorize(const Handle& f, const FactorizeOptions& opts = {}) {
    const BoundaryGrid grid(opts.grid_n);
    std::vector<double> lg(grid.size());
    const double floor_log = std::log(opts.min_modulus);
    for (int j = 0; j < grid.size(); ++j) {
        const double la = f.log_abs(opts.sample_r * grid.point(j));
        if (!std::isfinite(la) || la <= floor_log)
            throw std::invalid_argument(
                "factorize: boundary sample at angle " + std::to_string(grid.angle(j)) +
                " is not bounded away from zero (log|f| = " + std::to_string(la) + ")");
        lg[j] = la;
    }
    OuterFunction outer(BoundaryModulus(grid, std::move(lg)));

    double residual = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const cplx z = opts.test_r * grid.point(j);
        const double d = f.log_abs(z) - outer.log_abs(z);
        double dev = std::abs(std::expm1(d));
        if (!std::isfinite(dev)) dev = 1e12;
        residual = std::max(residual, std::min(dev, 1e12));
    }

    Handle fcopy = f;
    auto shared_outer = std::make_shared<OuterFunction>(outer);
    Handle inner = make_handle(
        [fcopy, shared_outer](cplx z) { return fcopy(z) / shared_outer->eval(z); },
        [fcopy, shared_outer](cplx z) { return fcopy.log_abs(z) - shared_outer->log_abs(z); });
    return Factorization{std::move(outer), residual, std::move(inner)};
}

struct SmirnovOptions {
    double percentile = 0.99;
    double divergence_ratio = 1.5; // last/prev tail ratio flagged as divergent
    double stability_band = 0.10;  // |ratio-1| within this counts as stabilized
};

enum class SmirnovVerdict { Stable, Diverging, Inconclusive };

struct SmirnovReport {
    double score = 0.0;              // max rung tail
    std::vector<double> rung_tails;  // per ladder rung
    double last_ratio = 1.0;         // tail(last)/tail(prev)
    SmirnovVerdict verdict = SmirnovVerdict::Stable;
};

/// Heuristic uniform-integrability probe: mass of log+|f_r| carried above
/// the percentile cut, tracked along the ladder. Stabilizing tails are
/// consistent with the Smirnov class, doubling tails are not. Not a
/// decision procedure.
inline SmirnovReport smirnov_diagnostic(const Handle& f, const RadialLadder& ladder,
                                        const BoundaryGrid& grid, const SmirnovOptions& opts = {}) {
    SmirnovReport rep;
    std::vector<double> logplus(grid.size());
    for (double r : ladder.radii()) {
        for (int j = 0; j < grid.size(); ++j) {
            const double la = f.log_abs(r * grid.point(j));
            if (std::isnan(la)) throw std::invalid_argument("smirnov_diagnostic: NaN sample");
            logplus[j] = std::max(0.0, la);
        }
        std::vector<double> sorted = logplus;
        std::sort(sorted.begin(), sorted.end());
        const auto cut_idx =
            static_cast<std::size_t>(opts.percentile * (sorted.size() - 1));
        const double cut = sorted[cut_idx];
        double tail = 0.0;
        for (double s : logplus)
            if (s > cut) tail += s;
        tail /= grid.size();
        rep.rung_tails.push_back(tail);
        rep.score = std::max(rep.score, tail);
    }
    const std::size_t m = rep.rung_tails.size();
    if (m >= 2) {
        const double last = rep.rung_tails[m - 1], prev = rep.rung_tails[m - 2];
        rep.last_ratio = (prev > 0.0) ? last / prev
                                      : (last > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    }
    if (rep.score <= 1e-12 || std::abs(rep.last_ratio - 1.0) <= opts.stability_band)
        rep.verdict = SmirnovVerdict::Stable;
    else if (rep.last_ratio > opts.divergence_ratio)
        rep.verdict = SmirnovVerdict::Diverging;
    else
        rep.verdict = SmirnovVerdict::Inconclusive;
    return rep;
}

} // namespace disklab

#endif
