#ifndef DISKLAB_COMPOSE_HPP
#define DISKLAB_COMPOSE_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "blaschke.hpp"
#include "config.hpp"
#include "core.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "spaces.hpp"
#include "taylor.hpp"

// Weighted composition operators Tf = psi*(f o phi), their monomial-basis
// matrices, and the composition-flavored theorem checks (boundary-limit
// identity, subordination bound, Dirichlet multiplicativity).

namespace disklab {

namespace detail {

inline std::vector<cplx> probe_points(int count, double rmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<cplx> pts(count);
    for (auto& z : pts) z = std::polar(rmax * std::sqrt(uni(rng)), two_pi * uni(rng));
    return pts;
}

} // namespace detail

class WeightedCompositionOperator {
public:
    WeightedCompositionOperator(Handle psi, Handle phi) : psi_(std::move(psi)), phi_(std::move(phi)) {
        check_self_map();
    }
    WeightedCompositionOperator(InnerFunction psi, InnerFunction phi)
        : psi_(Handle(psi)), phi_(Handle(phi)), psi_inner_(std::move(psi)),
          phi_inner_(std::move(phi)) {
        check_self_map();
    }

    const Handle& psi() const { return psi_; }
    const Handle& phi() const { return phi_; }
    const std::optional<InnerFunction>& psi_inner() const { return psi_inner_; }
    const std::optional<InnerFunction>& phi_inner() const { return phi_inner_; }

    Handle apply(const Handle& f) const {
        Handle psi = psi_, phi = phi_;
        return make_handle(
            [psi, phi, f](cplx z) { return psi(z) * f(phi(z)); },
            [psi, phi, f](cplx z) { return psi.log_abs(z) + f.log_abs(phi(z)); });
    }

private:
    void check_self_map() const {
        for (const cplx& z : detail::probe_points(64, 0.97, 0xd15cu)) {
            const double m = std::abs(phi_(z));
            if (!(m < 1.0))
                throw std::invalid_argument(
                    "WeightedCompositionOperator: phi is not a self-map of the disk (|phi| = " +
                    std::to_string(m) + " at a probe point)");
        }
    }

    Handle psi_, phi_;
    std::optional<InnerFunction> psi_inner_, phi_inner_;
};

inline Handle apply(const WeightedCompositionOperator& T, const Handle& f) { return T.apply(f); }

struct OperatorMatrix {
    std::vector<TaylorSeries> columns;  // column k = coefficients of T(z^k)
    std::vector<double> tail_mass;      // geometric tail estimate per column
};

/// Columns T(z^k) = psi * phi^k for k = 0..K, each truncated at order M.
/// psi and phi must expose Taylor data.
inline OperatorMatrix monomial_matrix(const WeightedCompositionOperator& T, int K, int M) {
    if (K < 0 || M < 0) throw std::invalid_argument("monomial_matrix: K, M must be >= 0");
    auto psi_t = T.psi().taylor(M);
    auto phi_t = T.phi().taylor(M);
    if (!psi_t || !phi_t)
        throw std::invalid_argument("monomial_matrix: psi and phi must carry Taylor data");
    OperatorMatrix out;
    out.columns.reserve(K + 1);
    TaylorSeries col = psi_t->truncated(M);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) col = taylor_mul(col, *phi_t, M);
        out.columns.push_back(col);
        out.tail_mass.push_back(taylor_tail_mass(col));
    }
    return out;
}

struct LindelofResult {
    double residual = 0.0;
    int excluded = 0; // grid points skipped near atoms / unstable traces
};

/// Boundary-limit identity (f o h)* = f* o h*, sampled: compares
/// f(h(r2 e^{it})) against f(r2 * u) where u is the unit-rescaled radial
/// trace h(r1 e^{it}). Arcs around singular atoms and points whose trace
/// has not stabilized are excluded and counted.
inline LindelofResult lindelof_check(const Handle& f, const InnerFunction& h,
                                     const BoundaryGrid& grid,
                                     double r1 = 1.0 - 1e-6, double r2 = 1.0 - 1e-6,
                                     double arc_radians = 1e-2, double stability = 1e-3) {
    if (h.is_unimodular_constant())
        throw std::invalid_argument("lindelof_check: h must be nonconstant");
    for (const cplx& z : detail::probe_points(64, 1.0 - 1e-6, 0xb0dedu)) {
        const double m = std::abs(f(z));
        if (!(m < 1e6))
            throw std::invalid_argument("lindelof_check: f does not look bounded on the disk");
    }
    LindelofResult out;
    const auto& atoms = h.measure().atoms();
    for (int j = 0; j < grid.size(); ++j) {
        const double t = grid.angle(j);
        bool skip = false;
        for (const Atom& a : atoms)
            if (angular_distance(t, a.angle) < arc_radians) skip = true;
        cplx w;
        if (!skip) {
            w = h.eval(r1 * grid.point(j));
            if (1.0 - std::abs(w) > stability) skip = true; // radial trace not stabilized
        }
        if (skip) {
            ++out.excluded;
            continue;
        }
        const cplx lhs = f(h.eval(r2 * grid.point(j)));
        const cplx rhs = f(r2 * w / std::abs(w));
        out.residual = std::max(out.residual, std::abs(lhs - rhs));
    }
    return out;
}

struct LittlewoodResult {
    double lhs = 0.0;   // ||f o phi||_p
    double bound = 0.0; // ((1+|b|)/(1-|b|))^{1/p} ||f||_p, b = phi(0)
    cplx b;
};

/// Subordination bound with the standard constant ((1+|b|)/(1-|b|))^{1/p};
/// the contract is lhs <= bound + slack.
inline LittlewoodResult littlewood_check(const TaylorSeries& f, const Handle& phi, double p,
                                         const RadialLadder& ladder, const BoundaryGrid& grid) {
    if (!(p >= 1.0)) throw std::invalid_argument("littlewood_check: p must be >= 1");
    LittlewoodResult out;
    out.b = phi(cplx(0.0));
    const double bmod = std::abs(out.b);
    if (!(bmod < 1.0)) throw std::invalid_argument("littlewood_check: phi(0) not in the disk");
    Handle composed = make_handle([f, phi](cplx z) { return f.eval(phi(z)); });
    out.lhs = hp_norm(composed, p, ladder, grid).value;
    out.bound = std::pow((1.0 + bmod) / (1.0 - bmod), 1.0 / p) *
                hp_norm(Handle(f), p, ladder, grid).value;
    return out;
}

struct DirichletMultResult {
    double lhs = 0.0; // D(f o B) from coefficients at the chosen order
    double rhs = 0.0; // degree(B) * D(f)
    int order_used = 0;
    double tail = 0.0; // estimated Dirichlet mass beyond the truncation
    bool tail_ok = true;
};

/// D(f o B) = n D(f) for a degree-n finite Blaschke product. The truncation
/// order escalates (doubling) until the estimated Dirichlet tail drops
/// below the threshold; insufficient max order is reported, not hidden.
inline DirichletMultResult dirichlet_mult_check(const TaylorSeries& f, const FiniteBlaschke& B,
                                                int base_order = 400, int max_order = 1600,
                                                double tail_tol = 1e-6) {
    if (B.degree() < 1) throw std::invalid_argument("dirichlet_mult_check: degree(B) must be >= 1");
    DirichletMultResult out;
    out.rhs = B.degree() * dirichlet_energy(f);
    for (int K = base_order;; K *= 2) {
        const TaylorSeries comp = taylor_compose_poly(f, B.taylor(K), K);
        out.lhs = dirichlet_energy(comp);
        out.order_used = K;
        out.tail = taylor_tail_mass(comp, /*dirichlet_weight=*/true);
        out.tail_ok = out.tail <= tail_tol;
        if (out.tail_ok || K >= max_order) break;
    }
    return out;
}

} // namespace disklab

#endif
