#ifndef DISKLAB_TAYLOR_HPP
#define DISKLAB_TAYLOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"

// Truncated power series at the origin: the computational currency for
// norms, operator matrices and series-side cross checks.

namespace disklab {

class TaylorSeries {
public:
    TaylorSeries() : c_{cplx(0.0)} {}
    explicit TaylorSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(cplx(0.0));
        trim();
    }

    static TaylorSeries monomial(int n, cplx coeff = cplx(1.0)) {
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
        c.back() = coeff;
        return TaylorSeries(std::move(c));
    }
    static TaylorSeries constant(cplx v) { return TaylorSeries({v}); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const cplx> coeffs() const { return c_; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : cplx(0.0);
    }

    cplx eval(cplx z) const {
        cplx acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }
    double log_abs(cplx z) const { return std::log(std::abs(eval(z))); }

    TaylorSeries truncated(int order) const {
        if (order < 0) throw std::invalid_argument("TaylorSeries: negative order");
        std::vector<cplx> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
        return TaylorSeries(std::move(c));
    }
    TaylorSeries taylor(int order) const { return truncated(order); }

private:
    void trim() {
        while (c_.size() > 1 && std::abs(c_.back()) < 1e-300) c_.pop_back();
    }
    std::vector<cplx> c_;
};

inline TaylorSeries taylor_add(const TaylorSeries& a, const TaylorSeries& b, cplx alpha = 1.0,
                               cplx beta = 1.0) {
    std::vector<cplx> c(std::max(a.order(), b.order()) + 1);
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        c[k] = alpha * a.coeff(k) + beta * b.coeff(k);
    return TaylorSeries(std::move(c));
}

inline TaylorSeries taylor_scale(const TaylorSeries& a, cplx alpha) {
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= alpha;
    return TaylorSeries(std::move(c));
}

/// Product truncated to the given order.
inline TaylorSeries taylor_mul(const TaylorSeries& a, const TaylorSeries& b, int order) {
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx(0.0));
    const int ka = std::min(order, a.order());
    for (int i = 0; i <= ka; ++i) {
        const cplx ai = a.coeff(i);
        if (ai == cplx(0.0)) continue;
        const int kb = std::min(order - i, b.order());
        for (int j = 0; j <= kb; ++j) c[i + j] += ai * b.coeff(j);
    }
    return TaylorSeries(std::move(c));
}

/// exp of a series via the b' = a' b recurrence.
inline TaylorSeries taylor_exp(const TaylorSeries& a, int order) {
    std::vector<cplx> b(static_cast<std::size_t>(order) + 1, cplx(0.0));
    b[0] = std::exp(a.coeff(0));
    for (int m = 1; m <= order; ++m) {
        cplx acc = 0.0;
        for (int k = 1; k <= std::min(m, a.order()); ++k)
            acc += static_cast<double>(k) * a.coeff(k) * b[m - k];
        b[m] = acc / static_cast<double>(m);
    }
    return TaylorSeries(std::move(b));
}

/// f(g) for polynomial f (Horner over truncated multiplication by g).
inline TaylorSeries taylor_compose_poly(const TaylorSeries& f, const TaylorSeries& g, int order) {
    TaylorSeries acc = TaylorSeries::constant(f.coeff(f.order()));
    for (int k = f.order() - 1; k >= 0; --k) {
        acc = taylor_mul(acc, g, order);
        acc = taylor_add(acc, TaylorSeries::constant(f.coeff(k)));
    }
    return acc.truncated(order);
}

/// Geometric extrapolation of sum_{n>K} w(n)|a_n|^2 from the trailing
/// coefficients; w(n) = 1 for plain mass, w(n) = n for Dirichlet-type mass.
inline double taylor_tail_mass(const TaylorSeries& a, bool dirichlet_weight = false) {
    const int K = a.order();
    if (K < 8) return 0.0;
    // fit |a_n| ~ C rho^n on the last quarter, ignoring zero entries
    const int lo = K - std::max(4, K / 4);
    double sum_num = 0.0, sum_den = 0.0;
    for (int n = lo + 1; n <= K; ++n) {
        const double prev = std::abs(a.coeff(n - 1)), cur = std::abs(a.coeff(n));
        if (prev > 1e-300 && cur > 1e-300) {
            sum_num += cur;
            sum_den += prev;
        }
    }
    const double aK = std::abs(a.coeff(K));
    if (sum_den <= 0.0 || sum_num <= 0.0 || aK <= 1e-300) return 0.0;
    double rho = sum_num / sum_den;
    if (rho >= 0.999) rho = 0.999; // refuse to extrapolate a flat tail optimistically
    const double q = rho * rho;
    double tail = aK * aK * q / (1.0 - q);
    if (dirichlet_weight) tail *= static_cast<double>(K) + 1.0 / (1.0 - q);
    return tail;
}

} // namespace disklab

#endif
