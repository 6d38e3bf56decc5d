#ifndef DISKLAB_PRESERVER_HPP
#define DISKLAB_PRESERVER_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compose.hpp"
#include "config.hpp"
#include "core.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "outer.hpp"
#include "taylor.hpp"

// Analysis of a linear map through its monomial action h_k = T(z^k):
// boundary innerness, the ratio relation h_k conj(h_{k-1}) = h_1 conj(h_0),
// reconstruction of (psi, phi) with h_k = psi phi^k, and the trichotomy
// weighted-composition / rank-one / not-a-preserver.

namespace disklab {

struct ActionEntry {
    Handle handle;
    std::optional<InnerFunction> canonical;
    std::optional<SingularMeasure> arc_atoms; // exclusion arcs when atom data is known

    ActionEntry(InnerFunction h) // NOLINT: implicit by design
        : handle(Handle(h)), canonical(h), arc_atoms(h.measure()) {}
    ActionEntry(TaylorSeries t) : handle(Handle(std::move(t))) {} // NOLINT
    explicit ActionEntry(Handle h, std::optional<SingularMeasure> atoms = std::nullopt)
        : handle(std::move(h)), arc_atoms(std::move(atoms)) {}
};

class MonomialAction {
public:
    explicit MonomialAction(std::vector<ActionEntry> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("MonomialAction: no entries");
    }
    int order() const { return static_cast<int>(entries_.size()) - 1; } // K
    const ActionEntry& entry(int k) const { return entries_.at(k); }
    const std::vector<ActionEntry>& entries() const { return entries_; }
    bool all_canonical() const {
        for (const auto& e : entries_)
            if (!e.canonical) return false;
        return true;
    }

private:
    std::vector<ActionEntry> entries_;
};

/// The action of Tf = psi*(f o phi) on monomials: h_k = psi * phi^k in
/// canonical form, k = 0..K.
inline MonomialAction synthesize(const InnerFunction& phi, const InnerFunction& psi, int K) {
    if (K < 2) throw std::invalid_argument("synthesize: K must be >= 2");
    std::vector<ActionEntry> entries;
    entries.reserve(K + 1);
    InnerFunction hk = psi;
    entries.emplace_back(hk);
    for (int k = 1; k <= K; ++k) {
        hk = hk.product(phi);
        entries.emplace_back(hk);
    }
    return MonomialAction(std::move(entries));
}

struct PhiAImage {
    cplx value;
    double tail_bound = 0.0; // |a|^K / (1-|a|)
    bool loose = false;      // tail bound above the requested tolerance
};

/// Truncated series for (T phi_a)(z) = sum_k (a conj(a)^k h_k - conj(a)^k
/// h_{k+1})(z), using the K+1 available entries.
inline PhiAImage phi_a_image(const MonomialAction& action, const DiskPoint& a, cplx z,
                             double tail_tol = 1e-6) {
    const int K = action.order();
    if (K < 1) throw std::invalid_argument("phi_a_image: need at least two entries");
    const cplx av = a.value();
    const cplx ac = std::conj(av);
    PhiAImage out;
    cplx acp = 1.0; // conj(a)^k
    cplx acc = 0.0;
    for (int k = 0; k + 1 <= K; ++k) {
        acc += av * acp * action.entry(k).handle(z) - acp * action.entry(k + 1).handle(z);
        acp *= ac;
    }
    out.value = acc;
    const double am = std::abs(av);
    out.tail_bound = (am < 1.0) ? std::pow(am, K) / (1.0 - am) : 0.0;
    out.loose = out.tail_bound > tail_tol;
    return out;
}

namespace detail {

inline bool action_point_excluded(const MonomialAction& action, double r, double theta,
                                  double eps) {
    for (const auto& e : action.entries())
        if (e.arc_atoms && atom_arc_excluded(*e.arc_atoms, r, theta, eps)) return true;
    return false;
}

} // namespace detail

struct RelationUnstableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// max over boundary grid points (outside atom arcs) and k = 2..K of
/// |h_k conj(h_{k-1}) - h_1 conj(h_0)| at radius r: the boundary ratio
/// relation satisfied exactly by any true weighted composition action.
inline double relation_check(const MonomialAction& action, const BoundaryGrid& grid, double r,
                             const Tolerances& tol = {}) {
    const int K = action.order();
    if (K < 2) throw std::invalid_argument("relation_check: K must be >= 2");
    for (int k = 0; k <= K; ++k) {
        const auto& e = action.entry(k);
        const auto br = boundary_unimodularity_residual(
            e.handle, e.arc_atoms ? &*e.arc_atoms : nullptr, r, grid, tol.arc_deficit);
        if (br.residual > 1e-2)
            throw RelationUnstableError(
                "relation_check: boundary trace of entry " + std::to_string(k) +
                " has not stabilized (residual " + std::to_string(br.residual) +
                "); increase r or refine the grid");
    }
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        if (detail::action_point_excluded(action, r, grid.angle(j), tol.relation)) continue;
        const cplx z = r * grid.point(j);
        std::vector<cplx> vals(K + 1);
        for (int k = 0; k <= K; ++k) vals[k] = action.entry(k).handle(z);
        const cplx base = vals[1] * std::conj(vals[0]);
        for (int k = 2; k <= K; ++k)
            worst = std::max(worst, std::abs(vals[k] * std::conj(vals[k - 1]) - base));
    }
    return worst;
}

enum class Classification { WeightedComposition, RankOne, NotPreserver };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::WeightedComposition: return "WeightedComposition";
        case Classification::RankOne: return "RankOne";
        case Classification::NotPreserver: return "NotPreserver";
    }
    return "?";
}

struct PreserverReport {
    Classification classification = Classification::NotPreserver;
    Handle psi, phi; // populated unless the pipeline refuted earlier
    std::optional<InnerFunction> psi_canonical, phi_canonical;
    std::optional<cplx> alpha; // RankOne only
    std::vector<double> innerness_residuals;
    double relation_residual = -1.0;       // -1 = stage not reached
    double reconstruction_residual = -1.0; // -1 = stage not reached
    std::string failed_stage;              // empty when certified
    bool canonical_route = false;
};

struct ReconstructError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full pipeline of the preserver analysis; every stage threshold comes
/// from the tolerances in the config.
inline PreserverReport reconstruct(const MonomialAction& action, const RunConfig& cfg = {}) {
    const int K = action.order();
    if (K < 2) throw std::invalid_argument("reconstruct: need K >= 2 (at least three entries)");
    const BoundaryGrid grid = cfg.grid();
    const double r = cfg.boundary_r;
    PreserverReport rep;
    rep.canonical_route = action.all_canonical();

    // T(1) must be a nonzero inner function.
    auto probe = detail::probe_points(64, 0.8, cfg.seed ^ 0x9e3779b97f4a7c15ull);
    {
        double m = 0.0;
        for (const cplx& z : probe) m = std::max(m, std::abs(action.entry(0).handle(z)));
        if (m < 1e-12) {
            rep.failed_stage = "h0-vanishes";
            return rep;
        }
    }

    // stage 1: boundary innerness of every entry; the deficit side is
    // discretization-limited, the excess side violates the maximum
    // principle outright and gets a far tighter threshold
    std::vector<double> excesses;
    for (int k = 0; k <= K; ++k) {
        const auto& e = action.entry(k);
        const auto br = boundary_unimodularity_residual(
            e.handle, e.arc_atoms ? &*e.arc_atoms : nullptr, r, grid, cfg.tol.arc_deficit);
        rep.innerness_residuals.push_back(br.residual);
        excesses.push_back(br.excess);
    }
    for (int k = 0; k <= K; ++k) {
        if (rep.innerness_residuals[k] > cfg.tol.innerness ||
            excesses[k] > cfg.tol.innerness_excess) {
            rep.failed_stage = "innerness[" + std::to_string(k) + "]";
            return rep;
        }
    }

    // stage 2: boundary ratio relation
    rep.relation_residual = relation_check(action, grid, r, cfg.tol);
    if (rep.relation_residual > cfg.tol.relation) {
        rep.failed_stage = "relation";
        return rep;
    }

    // stage 3: phi = h1/h0
    std::vector<cplx> probe_used = probe;
    std::vector<cplx> phi_vals;
    if (rep.canonical_route) {
        const InnerFunction& h0 = *action.entry(0).canonical;
        const InnerFunction& h1 = *action.entry(1).canonical;
        DivisibilityCertificate cert = inner_divides(h0, h1);
        if (!cert.divides) {
            rep.failed_stage = "division";
            return rep;
        }
        InnerFunction q = inner_quotient(h0, h1);
        rep.phi_canonical = q;
        rep.psi_canonical = h0;
        rep.phi = Handle(q);
        rep.psi = Handle(h0);
        phi_vals.reserve(probe_used.size());
        for (const cplx& z : probe_used) phi_vals.push_back(q.eval(z));
    } else {
        const Handle h0 = action.entry(0).handle;
        const Handle h1 = action.entry(1).handle;
        std::vector<cplx> usable;
        for (const cplx& z : probe)
            if (std::abs(h0(z)) > 0.1) usable.push_back(z);
        if (usable.size() < 16) {
            auto bigger = detail::probe_points(256, 0.9, cfg.seed ^ 0xc2b2ae3d27d4eb4full);
            usable.clear();
            for (const cplx& z : bigger)
                if (std::abs(h0(z)) > 0.1) usable.push_back(z);
            if (usable.size() < 16)
                throw ReconstructError(
                    "reconstruct: |h0| <= 0.1 on the whole probe set; cannot divide h1/h0");
        }
        probe_used = std::move(usable);
        rep.psi = h0;
        rep.phi = make_handle([h0, h1](cplx z) { return h1(z) / h0(z); });
        phi_vals.reserve(probe_used.size());
        for (const cplx& z : probe_used) phi_vals.push_back(rep.phi(z));
    }

    // stage 4: verify h_k = psi phi^k on the probe
    double recon = 0.0;
    for (std::size_t i = 0; i < probe_used.size(); ++i) {
        const cplx z = probe_used[i];
        const cplx psi_z = rep.psi(z);
        cplx pw = 1.0;
        for (int k = 0; k <= K; ++k) {
            recon = std::max(recon, std::abs(action.entry(k).handle(z) - psi_z * pw));
            pw *= phi_vals[i];
        }
    }
    rep.reconstruction_residual = recon;
    const double rec_tol =
        rep.canonical_route ? cfg.tol.reconstruction_canonical : cfg.tol.reconstruction_numeric;
    if (recon > rec_tol) {
        rep.failed_stage = "reconstruction";
        return rep;
    }

    // stage 5: classify by phi constancy
    cplx mean = 0.0;
    for (const cplx& v : phi_vals) mean += v;
    mean /= static_cast<double>(phi_vals.size());
    double var = 0.0;
    for (const cplx& v : phi_vals) var += std::norm(v - mean);
    var /= static_cast<double>(phi_vals.size());
    if (var < cfg.tol.phi_constancy && std::abs(std::abs(mean) - 1.0) < cfg.tol.phi_constancy) {
        rep.classification = Classification::RankOne;
        rep.alpha = mean / std::abs(mean);
    } else {
        rep.classification = Classification::WeightedComposition;
    }
    return rep;
}

/// Tf = f(alpha) psi for the rank-one case; f must be a polynomial so that
/// f(alpha) on the circle makes sense.
inline Handle rank_one_apply(const UnimodularConstant& alpha, const Handle& psi,
                             const TaylorSeries& f) {
    const cplx value = f.eval(alpha.value());
    Handle p = psi;
    return make_handle([p, value](cplx z) { return value * p(z); },
                       [p, value](cplx z) { return std::log(std::abs(value)) + p.log_abs(z); });
}

// ---------------------------------------------------------------------------
// Innerness transfer along T (both directions) and the surjectivity probes.

enum class CorollaryDirection { Forward, Backward };

struct CorollaryReport {
    double premise_residual = 0.0;    // forward: f;  backward: Tf/psi = f o phi
    double conclusion_residual = 0.0; // forward: Tf; backward: f
};

/// Boundary innerness residual of a handle, with optional canonical
/// fast path: fully canonical data is composed in closed form and measured
/// on the unit circle itself.
inline double innerness_residual(const Handle& f, const SingularMeasure* exclusion,
                                 const RunConfig& cfg) {
    const BoundaryGrid grid = cfg.grid();
    return boundary_unimodularity_residual(f, exclusion, cfg.boundary_r, grid,
                                           cfg.tol.arc_deficit)
        .residual;
}

inline CorollaryReport corollary_check(const WeightedCompositionOperator& T, const Handle& f,
                                       std::optional<InnerFunction> f_canonical,
                                       CorollaryDirection direction, const RunConfig& cfg = {}) {
    const BoundaryGrid grid = cfg.grid();
    SingularMeasure exclusion;
    if (T.psi_inner()) exclusion = exclusion.plus(T.psi_inner()->measure());
    if (T.phi_inner()) exclusion = exclusion.plus(T.phi_inner()->measure());
    if (f_canonical) exclusion = exclusion.plus(f_canonical->measure());

    const bool canonical_compose = f_canonical && f_canonical->is_finite_blaschke() &&
                                   T.psi_inner() && T.phi_inner() &&
                                   T.phi_inner()->is_finite_blaschke() &&
                                   !T.phi_inner()->blaschke().is_constant();

    CorollaryReport rep;
    if (direction == CorollaryDirection::Forward) {
        rep.premise_residual =
            boundary_unimodularity_residual(f, f_canonical ? &f_canonical->measure() : nullptr,
                                            cfg.boundary_r, grid, cfg.tol.arc_deficit)
                .residual;
        if (canonical_compose) {
            const FiniteBlaschke comp =
                blaschke_compose(f_canonical->blaschke(), T.phi_inner()->blaschke());
            const InnerFunction tf = T.psi_inner()->product(InnerFunction(comp));
            rep.conclusion_residual =
                boundary_unimodularity_residual(Handle(tf), &tf.measure(), 1.0, grid,
                                                cfg.tol.arc_deficit)
                    .residual;
        } else {
            rep.conclusion_residual =
                boundary_unimodularity_residual(T.apply(f), &exclusion, cfg.boundary_r, grid,
                                                cfg.tol.arc_deficit)
                    .residual;
        }
    } else {
        Handle phi = T.phi();
        Handle fcopy = f;
        Handle f_of_phi =
            make_handle([fcopy, phi](cplx z) { return fcopy(phi(z)); },
                        [fcopy, phi](cplx z) { return fcopy.log_abs(phi(z)); });
        rep.premise_residual = boundary_unimodularity_residual(f_of_phi, &exclusion,
                                                               cfg.boundary_r, grid,
                                                               cfg.tol.arc_deficit)
                                   .residual;
        rep.conclusion_residual =
            boundary_unimodularity_residual(f, f_canonical ? &f_canonical->measure() : nullptr,
                                            cfg.boundary_r, grid, cfg.tol.arc_deficit)
                .residual;
    }
    return rep;
}

struct OuterWitnessResult {
    double image_inner_residual = 0.0;      // factorize residual of Tf
    double inner_constancy_deviation = 0.0; // inner part away from a unimodular constant
    double psi_constancy_deviation = 0.0;   // max |psi(z) - psi(0)| over the probe
    double psi_unimodular_deviation = 0.0;  // ||psi(0)| - 1|
    bool consistent = false;                // outer image plausible => psi constant
};

struct SeparationResult {
    bool separates = false;
    double max_image_gap = 0.0; // max_k |T(z^k)(z1) - T(z^k)(z2)|
    bool phi_automorphism = false;
};

struct SurjectivityReport {
    std::optional<OuterWitnessResult> outer;
    std::optional<SeparationResult> separation;
};

/// Witness-based probe of the surjectivity consequences: a claimed f with
/// Tf outer supports "psi is a unimodular constant"; a separating point
/// pair supports "phi is an automorphism". Inconsistent witnesses are
/// reported, not rejected.
inline SurjectivityReport surjectivity_probe(const WeightedCompositionOperator& T,
                                             const std::optional<Handle>& outer_witness,
                                             const std::optional<std::pair<cplx, cplx>>& points,
                                             const RunConfig& cfg = {}) {
    SurjectivityReport rep;
    if (outer_witness) {
        OuterWitnessResult ow;
        Factorization fac = factorize(T.apply(*outer_witness),
                                      FactorizeOptions{cfg.grid_n, cfg.boundary_r, cfg.test_r});
        ow.image_inner_residual = fac.inner_residual;
        auto probe = detail::probe_points(64, 0.8, cfg.seed ^ 0xa0761d6478bd642full);
        const cplx ih0 = fac.inner(probe.front());
        double dev = std::abs(std::abs(ih0) - 1.0);
        for (const cplx& z : probe) dev = std::max(dev, std::abs(fac.inner(z) - ih0));
        ow.inner_constancy_deviation = dev;
        const cplx psi0 = T.psi()(cplx(0.0));
        ow.psi_unimodular_deviation = std::abs(std::abs(psi0) - 1.0);
        for (const cplx& z : probe)
            ow.psi_constancy_deviation =
                std::max(ow.psi_constancy_deviation, std::abs(T.psi()(z) - psi0));
        ow.consistent = ow.inner_constancy_deviation < 1e-2;
        rep.outer = ow;
    }
    if (points) {
        SeparationResult sep;
        const auto& [z1, z2] = *points;
        for (int k = 0; k <= 8; ++k) {
            Handle img = T.apply(Handle(TaylorSeries::monomial(k)));
            sep.max_image_gap = std::max(sep.max_image_gap, std::abs(img(z1) - img(z2)));
        }
        sep.separates = sep.max_image_gap > 1e-10;
        sep.phi_automorphism = T.phi_inner() && T.phi_inner()->is_finite_blaschke() &&
                               T.phi_inner()->blaschke().degree() == 1;
        rep.separation = sep;
    }
    return rep;
}

} // namespace disklab

#endif
