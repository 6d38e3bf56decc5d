#ifndef DISKLAB_BLASCHKE_HPP
#define DISKLAB_BLASCHKE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "function.hpp"
#include "roots.hpp"
#include "taylor.hpp"

// Finite Blaschke products in canonical form: a unimodular constant times
// elementary factors (|a|/a)(a-z)/(1-conj(a)z). A zero at the origin
// contributes the factor z (the limit convention); zeros with |a| < 1e-14
// are snapped to the origin at construction so factor phases stay
// deterministic.

namespace disklab {

class FiniteBlaschke {
public:
    FiniteBlaschke() = default; // the constant function 1
    explicit FiniteBlaschke(UnimodularConstant c, std::vector<cplx> zeros = {})
        : c_(c), zeros_(std::move(zeros)) {
        for (cplx& a : zeros_) {
            if (std::abs(a) < 1e-14) a = 0.0;
            if (!(std::abs(a) < 1.0))
                throw std::invalid_argument("FiniteBlaschke: zero outside the open disk");
        }
    }

    static FiniteBlaschke monomial(int n) {
        return FiniteBlaschke(UnimodularConstant(), std::vector<cplx>(n, cplx(0.0)));
    }
    /// phi_a as a canonical product: constant a/|a| (or -1 when a = 0).
    static FiniteBlaschke mobius(cplx a) {
        if (std::abs(a) < 1e-14)
            return FiniteBlaschke(UnimodularConstant(cplx(-1.0)), {cplx(0.0)});
        return FiniteBlaschke(UnimodularConstant::normalizing(a), {a});
    }

    int degree() const { return static_cast<int>(zeros_.size()); }
    const std::vector<cplx>& zeros() const { return zeros_; }
    cplx constant() const { return c_.value(); }
    bool is_constant() const { return zeros_.empty(); }

    cplx eval(cplx z) const {
        cplx acc = c_.value();
        for (const cplx& a : zeros_) {
            if (a == cplx(0.0)) {
                acc *= z;
            } else {
                const double m = std::abs(a);
                acc *= (m / a) * (a - z) / (1.0 - std::conj(a) * z);
            }
        }
        return acc;
    }

    double log_abs(cplx z) const {
        double acc = 0.0;
        for (const cplx& a : zeros_) {
            if (a == cplx(0.0))
                acc += std::log(std::abs(z));
            else
                acc += std::log(std::abs(a - z)) - std::log(std::abs(1.0 - std::conj(a) * z));
        }
        return acc;
    }

    /// Taylor coefficients at 0 up to the given order. Elementary factor:
    /// coeff_0 = |a|, coeff_m = -(|a|/a)(1-|a|^2) conj(a)^{m-1}; multiplying
    /// by such a factor is O(order) via the geometric prefix recurrence.
    TaylorSeries taylor(int order) const {
        std::vector<cplx> s(static_cast<std::size_t>(order) + 1, cplx(0.0));
        s[0] = c_.value();
        for (const cplx& a : zeros_) {
            if (a == cplx(0.0)) {
                for (std::size_t m = s.size(); m-- > 1;) s[m] = s[m - 1];
                s[0] = 0.0;
                continue;
            }
            const double m0 = std::abs(a);
            const cplx ac = std::conj(a);
            const cplx head = -(m0 / a) * (1.0 - m0 * m0);
            // w_m = sum_{j<m} conj(a)^{m-1-j} s_j
            cplx w = 0.0;
            cplx prev = s[0];
            for (std::size_t m = 0; m < s.size(); ++m) {
                const cplx sm = s[m];
                if (m > 0) {
                    w = ac * w + prev;
                    prev = sm;
                }
                s[m] = m0 * sm + (m > 0 ? head * w : cplx(0.0));
            }
        }
        return TaylorSeries(std::move(s));
    }

    /// Pointwise product: union of zeros, product of constants.
    FiniteBlaschke product(const FiniteBlaschke& other) const {
        std::vector<cplx> z = zeros_;
        z.insert(z.end(), other.zeros_.begin(), other.zeros_.end());
        return FiniteBlaschke(UnimodularConstant::normalizing(c_.value() * other.c_.value()),
                              std::move(z));
    }

    FiniteBlaschke pow(int k) const {
        FiniteBlaschke acc;
        for (int i = 0; i < k; ++i) acc = acc.product(*this);
        return acc;
    }

private:
    UnimodularConstant c_;
    std::vector<cplx> zeros_;
};

struct PreimageError : std::runtime_error {
    PreimageError(const std::string& msg, cplx offending)
        : std::runtime_error(msg), offending_value(offending) {}
    cplx offending_value;
};

/// The degree(B) solutions of B(z) = w in the disk, with multiplicity.
/// Clears denominators to a degree(B) polynomial, extracts all roots,
/// Newton-polishes, and accepts only on the residual |B(z)-w| < 1e-9.
inline std::vector<cplx> blaschke_preimages(const FiniteBlaschke& B, cplx w,
                                            double residual_tol = 1e-9) {
    if (B.is_constant()) throw std::invalid_argument("blaschke_preimages: constant product");
    if (!(std::abs(w) < 1.0)) throw std::invalid_argument("blaschke_preimages: |w| must be < 1");

    // numerator c * prod u_a (a - z) * z^{m0}, denominator prod (1 - conj(a) z)
    Poly num{B.constant()};
    Poly den{cplx(1.0)};
    for (const cplx& a : B.zeros()) {
        if (a == cplx(0.0)) {
            num = poly_mul(num, Poly{cplx(0.0), cplx(1.0)});
        } else {
            const cplx u = std::abs(a) / a;
            num = poly_mul(num, Poly{u * a, -u});
            den = poly_mul(den, Poly{cplx(1.0), -std::conj(a)});
        }
    }
    Poly p(std::max(num.size(), den.size()), cplx(0.0));
    for (std::size_t i = 0; i < num.size(); ++i) p[i] += num[i];
    for (std::size_t i = 0; i < den.size(); ++i) p[i] -= w * den[i];

    RootResult rr = polynomial_roots(p);
    std::vector<cplx> inside;
    for (const cplx& z : rr.roots) {
        if (std::abs(z) < 1.0 && std::abs(B.eval(z) - w) < residual_tol) inside.push_back(z);
    }
    if (static_cast<int>(inside.size()) != B.degree()) {
        double worst = 0.0;
        cplx worst_root = rr.roots.empty() ? cplx(0.0) : rr.roots.front();
        for (const cplx& z : rr.roots) {
            const double res = std::abs(B.eval(z) - w);
            if (res > worst) {
                worst = res;
                worst_root = z;
            }
        }
        throw PreimageError("blaschke_preimages: expected " + std::to_string(B.degree()) +
                                " preimages of (" + std::to_string(w.real()) + "," +
                                std::to_string(w.imag()) + "), accepted " +
                                std::to_string(inside.size()) + "; worst residual " +
                                std::to_string(worst),
                            worst_root);
    }
    return inside;
}

/// B1 composed with B2 as an explicit canonical product. Zeros are the
/// B2-preimages of the zeros of B1; the constant is fixed by one pointwise
/// evaluation and the result is verified against direct evaluation at 32
/// pseudorandom disk points.
inline FiniteBlaschke blaschke_compose(const FiniteBlaschke& B1, const FiniteBlaschke& B2,
                                       double verify_tol = 1e-9) {
    if (B2.is_constant()) throw std::invalid_argument("blaschke_compose: B2 must be nonconstant");

    std::vector<cplx> zeros;
    zeros.reserve(static_cast<std::size_t>(B1.degree()) * B2.degree());
    for (const cplx& a : B1.zeros()) {
        auto pre = blaschke_preimages(B2, a);
        zeros.insert(zeros.end(), pre.begin(), pre.end());
    }

    FiniteBlaschke raw(UnimodularConstant(), zeros);
    // pick a probe point away from the zeros to read off the constant
    std::mt19937_64 rng(0x5eedbl);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    cplx z0;
    for (int tries = 0;; ++tries) {
        z0 = std::polar(0.3 + 0.4 * uni(rng), two_pi * uni(rng));
        double d = 1.0;
        for (const cplx& a : zeros) d = std::min(d, std::abs(z0 - a));
        if (d > 0.05 || tries > 64) break;
    }
    const cplx direct = B1.eval(B2.eval(z0));
    const cplx ratio = direct / raw.eval(z0);
    if (std::abs(std::abs(ratio) - 1.0) > 1e-6)
        throw std::runtime_error("blaschke_compose: derived constant is not unimodular (|c| = " +
                                 std::to_string(std::abs(ratio)) + ")");
    FiniteBlaschke out(UnimodularConstant::normalizing(ratio), std::move(zeros));

    for (int i = 0; i < 32; ++i) {
        const cplx z = std::polar(0.95 * std::sqrt(uni(rng)), two_pi * uni(rng));
        const double err = std::abs(out.eval(z) - B1.eval(B2.eval(z)));
        if (!(err < verify_tol))
            throw std::runtime_error("blaschke_compose: verification failed, |error| = " +
                                     std::to_string(err));
    }
    return out;
}

} // namespace disklab

#endif
