#ifndef DISKLAB_SUITES_HPP
#define DISKLAB_SUITES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "compose.hpp"
#include "config.hpp"
#include "core.hpp"
#include "disklab.hpp"

// Named verification suites: each one turns a theorem-level statement into
// a batch of numerical cases with pinned tolerances. The CLI `verify`
// command prints them; the acceptance binary asserts them.

namespace disklab::suites {

// ---------------------------------------------------------------------------
// seeded instance generators

inline cplx random_disk_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    return std::polar(rmax * std::sqrt(uni(rng)), two_pi * uni(rng));
}

inline FiniteBlaschke random_blaschke(std::mt19937_64& rng, int min_deg, int max_deg,
                                      double rmax = 0.75) {
    std::uniform_int_distribution<int> degd(min_deg, max_deg);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<cplx> zeros(degd(rng));
    for (auto& a : zeros) a = random_disk_point(rng, rmax);
    return FiniteBlaschke(UnimodularConstant(std::polar(1.0, two_pi * uni(rng))), zeros);
}

inline SingularMeasure random_atoms(std::mt19937_64& rng, int min_atoms, int max_atoms,
                                    double min_mass = 0.1, double max_mass = 1.0) {
    std::uniform_int_distribution<int> atomd(min_atoms, max_atoms);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<Atom> atoms(atomd(rng));
    for (auto& a : atoms)
        a = {two_pi * uni(rng), min_mass + (max_mass - min_mass) * uni(rng)};
    return SingularMeasure(std::move(atoms));
}

inline InnerFunction random_inner(std::mt19937_64& rng, int min_deg, int max_deg, int min_atoms,
                                  int max_atoms, double rmax = 0.75) {
    return InnerFunction(random_blaschke(rng, min_deg, max_deg, rmax),
                         random_atoms(rng, min_atoms, max_atoms));
}

inline TaylorSeries random_poly(std::mt19937_64& rng, int max_deg, double scale = 1.0) {
    std::uniform_int_distribution<int> degd(1, max_deg);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<cplx> c(degd(rng) + 1);
    for (auto& x : c) x = scale * cplx(uni(rng), uni(rng));
    return TaylorSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// suite plumbing

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    std::vector<std::vector<std::string>> trace; // CSV rows, first row = header
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void add_case(SuiteReport& rep, const std::string& name, bool pass,
                     const std::string& detail) {
    rep.cases.push_back({name, pass, detail});
}

} // namespace detail

// ---------------------------------------------------------------------------
// lindelof: boundary-limit identity residuals

inline SuiteReport run_lindelof(const RunConfig& cfg) {
    SuiteReport rep{"lindelof"};
    std::mt19937_64 rng(cfg.seed);
    const BoundaryGrid grid(1 << 12);

    {
        const auto res = lindelof_check(Handle(TaylorSeries::monomial(2)),
                                        InnerFunction(FiniteBlaschke::monomial(1)), grid);
        detail::add_case(rep, "identity symbol", res.residual < 1e-12,
                         "residual=" + detail::fmt(res.residual));
    }
    for (int i = 0; i < 4; ++i) {
        const InnerFunction h(random_blaschke(rng, 1, 3));
        const auto res = lindelof_check(Handle(TaylorSeries::monomial(2)), h, grid);
        detail::add_case(rep, "blaschke symbol deg " + std::to_string(h.blaschke().degree()),
                         res.residual < 1e-4, "residual=" + detail::fmt(res.residual));
    }
    {
        const InnerFunction h(SingularMeasure({{0.0, 1.0}}));
        const auto res = lindelof_check(Handle(InnerFunction(FiniteBlaschke::mobius(cplx(0.5)))),
                                        h, grid, cfg.boundary_r, cfg.boundary_r,
                                        cfg.tol.lindelof_arc, cfg.tol.lindelof_stability);
        detail::add_case(rep, "atomic symbol off excluded arcs", res.residual < 1e-2,
                         "residual=" + detail::fmt(res.residual) +
                             " excluded=" + std::to_string(res.excluded));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// frostman: singular-mass scan of the shifted atom

inline SuiteReport run_frostman(const RunConfig& cfg) {
    SuiteReport rep{"frostman"};
    const InnerFunction h(SingularMeasure({{0.0, 1.0}}));
    const BoundaryGrid grid(1 << 14);
    const RadialLadder ladder = RadialLadder::dyadic(14); // reaches 1 - 6.1e-5
    const std::vector<cplx> a_grid{cplx(0.0), cplx(0.3), cplx(0.5), cplx(0.0, 0.7), cplx(-0.4)};
    FrostmanOptions opts;
    opts.threshold = cfg.tol.frostman;
    opts.threads = cfg.threads;
    opts.estimator.alias_cutoff = cfg.tol.alias_cutoff;
    const auto scan = frostman_scan(h, a_grid, ladder, grid, opts);
    rep.trace.push_back({"a_re", "a_im", "mass_estimate", "exceeds"});
    for (const auto& pt : scan)
        rep.trace.push_back({detail::fmt(pt.a.real()), detail::fmt(pt.a.imag()),
                             detail::fmt(pt.mass.estimate), pt.exceeds ? "1" : "0"});

    detail::add_case(rep, "a=0 keeps the unit mass", std::abs(scan[0].mass.estimate - 1.0) < 1e-2,
                     "estimate=" + detail::fmt(scan[0].mass.estimate));
    for (std::size_t i = 1; i < scan.size(); ++i)
        detail::add_case(rep,
                         "shift a=(" + detail::fmt(scan[i].a.real()) + "," +
                             detail::fmt(scan[i].a.imag()) + ") is Blaschke-like",
                         scan[i].mass.estimate <= cfg.tol.frostman,
                         "estimate=" + detail::fmt(scan[i].mass.estimate));
    return rep;
}

// ---------------------------------------------------------------------------
// littlewood: subordination bound over random cases

inline SuiteReport run_littlewood(const RunConfig& cfg) {
    SuiteReport rep{"littlewood"};
    std::mt19937_64 rng(cfg.seed);
    const RadialLadder ladder = cfg.ladder();
    const BoundaryGrid grid(1 << 10);
    const double ps[] = {1.0, 2.0, 4.0};
    for (int i = 0; i < 20; ++i) {
        const TaylorSeries f = random_poly(rng, 6);
        const FiniteBlaschke phi = random_blaschke(rng, 1, 3);
        const double p = ps[i % 3];
        const auto r = littlewood_check(f, Handle(InnerFunction(phi)), p, ladder, grid);
        detail::add_case(rep,
                         "case " + std::to_string(i) + " p=" + detail::fmt(p) + " deg=" +
                             std::to_string(phi.degree()),
                         r.lhs <= r.bound + cfg.tol.littlewood_slack,
                         "lhs=" + detail::fmt(r.lhs) + " bound=" + detail::fmt(r.bound));
    }
    // subordination case phi(0) = 0: constant-free bound
    const FiniteBlaschke factor = FiniteBlaschke::mobius(cplx(0.5));
    Handle phi0 = make_handle([factor](cplx z) { return z * factor.eval(z); });
    for (int i = 0; i < 4; ++i) {
        const TaylorSeries f = random_poly(rng, 5);
        const auto r = littlewood_check(f, phi0, 2.0, ladder, grid);
        const double plain = hp_norm(Handle(f), 2.0, ladder, grid).value;
        detail::add_case(rep, "origin-fixing case " + std::to_string(i),
                         r.lhs <= plain + cfg.tol.littlewood_slack,
                         "lhs=" + detail::fmt(r.lhs) + " ||f||=" + detail::fmt(plain));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dirichlet-mult: D(f o B) = deg(B) D(f)

inline SuiteReport run_dirichlet_mult(const RunConfig& cfg) {
    SuiteReport rep{"dirichlet-mult"};
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < 20; ++i) {
        const TaylorSeries f = random_poly(rng, 5);
        const FiniteBlaschke B = random_blaschke(rng, 1, 3);
        const auto r = dirichlet_mult_check(f, B, 400, 1600, cfg.tol.dirichlet_tail);
        const bool pass = r.tail_ok && std::abs(r.lhs - r.rhs) <= 1e-4 * std::max(1.0, r.rhs);
        detail::add_case(rep, "case " + std::to_string(i) + " deg=" + std::to_string(B.degree()),
                         pass,
                         "lhs=" + detail::fmt(r.lhs) + " rhs=" + detail::fmt(r.rhs) +
                             " K=" + std::to_string(r.order_used));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// axioms: growth of ||z^n||^{1/n}

inline SuiteReport run_axioms(const RunConfig& cfg, const std::string& which = "",
                              int n_max = 200) {
    SuiteReport rep{"axioms"};
    std::vector<SpaceNorm> norms;
    if (which.empty() || which == "hardy") {
        norms.push_back(SpaceNorm::hardy(1.0));
        norms.push_back(SpaceNorm::hardy(2.0));
        norms.push_back(SpaceNorm::hardy(4.0));
    }
    if (which.empty() || which == "dirichlet") norms.push_back(SpaceNorm::dirichlet());
    if (which.empty() || which == "bergman-a2") norms.push_back(SpaceNorm::bergman_a2());
    if (norms.empty()) throw std::invalid_argument("run_axioms: unknown norm '" + which + "'");

    rep.trace.push_back({"norm", "n", "value"});
    for (const auto& norm : norms) {
        const auto seq = axiom_x3_check(norm, n_max);
        for (int n = 1; n <= n_max; ++n)
            rep.trace.push_back({norm.name(), std::to_string(n), detail::fmt(seq[n - 1])});
        double worst = 0.0;
        for (int n = n_max / 2; n <= n_max; ++n) worst = std::max(worst, seq[n - 1]);
        detail::add_case(rep, std::string(norm.name()) + " tail below 1.05", worst <= 1.05,
                         "max=" + detail::fmt(worst));
        if (norm.kind == SpaceNorm::Kind::Dirichlet && n_max >= 100) {
            const double expect = std::pow(101.0, 1.0 / 200.0);
            detail::add_case(rep, "dirichlet closed form at n=100",
                             std::abs(seq[99] - expect) < 1e-12,
                             "value=" + detail::fmt(seq[99]));
        }
    }
    (void)cfg;
    return rep;
}

// ---------------------------------------------------------------------------
// distance: finite Blaschke products vs singular-bearing inner functions

inline SuiteReport run_distance(const RunConfig& cfg) {
    SuiteReport rep{"distance"};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const BoundaryGrid grid(1 << 12);
    const double r = 0.999;
    rep.trace.push_back({"case", "probe"});
    for (int i = 0; i < 5; ++i) {
        // keep the atom angularly clear of the Blaschke zeros so the probe
        // sees the full gap
        const double atom_angle = two_pi * uni(rng);
        std::vector<cplx> zeros(i % 3);
        for (auto& a : zeros) {
            const double off = 0.5 + (two_pi - 1.0) * uni(rng);
            a = std::polar(0.6 * std::sqrt(uni(rng)), atom_angle + off);
        }
        const FiniteBlaschke B(UnimodularConstant(std::polar(1.0, two_pi * uni(rng))), zeros);
        const InnerFunction h(SingularMeasure({{atom_angle, 1.0 + uni(rng)}}));
        const double probe = blaschke_distance_probe(B, h, grid, r);
        rep.trace.push_back({std::to_string(i), detail::fmt(probe)});
        detail::add_case(rep, "pair " + std::to_string(i), probe >= 0.99,
                         "probe=" + detail::fmt(probe));
    }
    (void)cfg;
    return rep;
}

// ---------------------------------------------------------------------------
// smirnov: uniform-integrability diagnostic regimes

inline SuiteReport run_smirnov(const RunConfig& cfg) {
    SuiteReport rep{"smirnov"};
    const BoundaryGrid grid(cfg.grid_n);
    const RadialLadder ladder = RadialLadder::dyadic(14);

    const auto bounded = smirnov_diagnostic(
        Handle(InnerFunction(FiniteBlaschke::mobius(cplx(0.5)))), ladder, grid);
    detail::add_case(rep, "bounded function scores zero", bounded.score <= 1e-12,
                     "score=" + detail::fmt(bounded.score));

    Handle pole = make_handle([](cplx z) { return 1.0 / (1.0 - z); });
    const auto outer_case = smirnov_diagnostic(pole, ladder, grid);
    detail::add_case(rep, "outer 1/(1-z) stabilizes",
                     outer_case.verdict == SmirnovVerdict::Stable,
                     "ratio=" + detail::fmt(outer_case.last_ratio));

    const SingularInner s(SingularMeasure({{0.0, 1.0}}));
    Handle recip = make_handle([s](cplx z) { return 1.0 / s.eval(z); },
                               [s](cplx z) { return -s.log_abs(z); });
    const auto div = smirnov_diagnostic(recip, ladder, grid);
    detail::add_case(rep, "reciprocal singular inner diverges",
                     div.verdict == SmirnovVerdict::Diverging,
                     "ratio=" + detail::fmt(div.last_ratio));
    return rep;
}

// ---------------------------------------------------------------------------
// preserver batteries (acceptance criteria 1-4)

struct RoundTripInstance {
    InnerFunction phi, psi;
    MonomialAction action;
};

inline RoundTripInstance make_round_trip_instance(std::mt19937_64& rng, int K) {
    InnerFunction phi(random_blaschke(rng, 1, 4, 0.75));
    InnerFunction psi = random_inner(rng, 0, 2, 0, 2, 0.75);
    MonomialAction action = synthesize(phi, psi, K);
    return {std::move(phi), std::move(psi), std::move(action)};
}

struct RoundTripBattery {
    int total = 0;
    int classified = 0;        // WeightedComposition verdicts
    double worst_zero = 0.0;   // recovered zero distance
    double worst_mass = 0.0;   // recovered atom mass error
    double worst_const = 0.0;  // recovered unimodular constant error
    double worst_residual = 0.0;
    bool all_pass() const {
        return classified == total && worst_zero <= 1e-10 && worst_mass <= 1e-12 &&
               worst_const <= 1e-12;
    }
};

namespace detail {

inline double zero_multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return 1.0;
    auto by_parts = [](cplx x, cplx y) {
        return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
    };
    std::sort(a.begin(), a.end(), by_parts);
    std::sort(b.begin(), b.end(), by_parts);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double atom_distance(const SingularMeasure& a, const SingularMeasure& b) {
    if (a.atoms().size() != b.atoms().size()) return 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.atoms().size(); ++i) {
        worst = std::max(worst, angular_distance(a.atoms()[i].angle, b.atoms()[i].angle));
        worst = std::max(worst, std::abs(a.atoms()[i].mass - b.atoms()[i].mass));
    }
    return worst;
}

} // namespace detail

inline RoundTripBattery run_round_trip_battery(const RunConfig& cfg, int instances = 50,
                                               int K = 6) {
    RoundTripBattery out;
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < instances; ++i) {
        const RoundTripInstance inst = make_round_trip_instance(rng, K);
        const PreserverReport rep = reconstruct(inst.action, cfg);
        ++out.total;
        if (rep.classification != Classification::WeightedComposition) continue;
        ++out.classified;
        out.worst_residual = std::max(out.worst_residual, rep.reconstruction_residual);
        out.worst_zero = std::max(
            out.worst_zero, detail::zero_multiset_distance(rep.phi_canonical->blaschke().zeros(),
                                                           inst.phi.blaschke().zeros()));
        out.worst_zero = std::max(
            out.worst_zero, detail::zero_multiset_distance(rep.psi_canonical->blaschke().zeros(),
                                                           inst.psi.blaschke().zeros()));
        out.worst_mass = std::max(out.worst_mass, detail::atom_distance(
                                                      rep.phi_canonical->measure(),
                                                      inst.phi.measure()));
        out.worst_mass = std::max(out.worst_mass, detail::atom_distance(
                                                      rep.psi_canonical->measure(),
                                                      inst.psi.measure()));
        out.worst_const = std::max(out.worst_const,
                                   std::abs(rep.phi_canonical->blaschke().constant() -
                                            inst.phi.blaschke().constant()));
        out.worst_const = std::max(out.worst_const,
                                   std::abs(rep.psi_canonical->blaschke().constant() -
                                            inst.psi.blaschke().constant()));
    }
    return out;
}

struct RefutationBattery {
    int total = 0;    // perturbed actions analyzed
    int refuted = 0;  // NotPreserver verdicts
    double min_true_relation = 0.0;      // max over true instances (should stay < 1e-3)
    double min_perturbed_relation = 1e9; // min over perturbed (should stay > 5e-4)
    double max_true_relation = 0.0;
};

/// Scales each h_k of each instance by 1.001 in turn; every perturbed
/// action must be refuted and must trip the boundary relation.
inline RefutationBattery run_refutation_battery(const RunConfig& cfg, int instances = 50,
                                                int K = 6) {
    RefutationBattery out;
    std::mt19937_64 rng(cfg.seed);
    const BoundaryGrid grid(1 << 12);
    for (int i = 0; i < instances; ++i) {
        const RoundTripInstance inst = make_round_trip_instance(rng, K);
        out.max_true_relation =
            std::max(out.max_true_relation, relation_check(inst.action, grid, cfg.boundary_r, cfg.tol));
        for (int k = 0; k <= K; ++k) {
            std::vector<ActionEntry> entries = inst.action.entries();
            Handle hk = entries[k].handle;
            entries[k] = ActionEntry(make_handle([hk](cplx z) { return 1.001 * hk(z); }),
                                     entries[k].arc_atoms);
            const MonomialAction perturbed(std::move(entries));
            ++out.total;
            if (reconstruct(perturbed, cfg).classification == Classification::NotPreserver)
                ++out.refuted;
            out.min_perturbed_relation =
                std::min(out.min_perturbed_relation,
                         relation_check(perturbed, grid, cfg.boundary_r, cfg.tol));
        }
    }
    return out;
}

struct RankOneBattery {
    int total = 0;
    int classified = 0;
    double worst_alpha = 0.0;
};

inline RankOneBattery run_rank_one_battery(const RunConfig& cfg, int instances = 10, int K = 6) {
    RankOneBattery out;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < instances; ++i) {
        const cplx alpha = std::polar(1.0, two_pi * uni(rng));
        const InnerFunction phi{FiniteBlaschke(UnimodularConstant(alpha))};
        const InnerFunction psi = random_inner(rng, 0, 2, 0, 2);
        const PreserverReport rep = reconstruct(synthesize(phi, psi, K), cfg);
        ++out.total;
        if (rep.classification == Classification::RankOne) {
            ++out.classified;
            out.worst_alpha = std::max(out.worst_alpha, std::abs(*rep.alpha - alpha));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// quotient-lemma battery (acceptance criterion 5)

struct LemmaBattery {
    int total = 0;
    int equivalence_ok = 0; // affine-family test agrees with componentwise order
    double worst_quotient_residual = 0.0;
    bool all_pass() const {
        return equivalence_ok == total && worst_quotient_residual <= 1e-9;
    }
};

inline LemmaBattery run_lemma_battery(const RunConfig& cfg, int pairs = 200) {
    LemmaBattery out;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < pairs; ++i) {
        // discrete measure vectors with deficits that cross zero by k = 50
        const int dim = 1 + i % 8;
        std::vector<double> mu0(dim), mu1(dim);
        bool expect_ge = true;
        for (int d = 0; d < dim; ++d) {
            mu0[d] = 0.2 + 2.8 * uni(rng);
            if (uni(rng) < 0.4) {
                const double deficit = (0.1 + 0.9 * uni(rng)) * mu0[d] * 0.5;
                mu1[d] = mu0[d] - std::max(deficit, mu0[d] / 40.0);
                expect_ge = false;
            } else {
                mu1[d] = mu0[d] + 2.0 * uni(rng);
            }
        }
        const bool ge = componentwise_ge(mu1, mu0);
        const bool fam = affine_family_nonneg(mu0, mu1, 50);
        ++out.total;
        if (ge == fam && ge == expect_ge) ++out.equivalence_ok;
    }
    // quotient pointwise verification on synthesized divisor pairs
    for (int i = 0; i < 40; ++i) {
        const InnerFunction h0 = random_inner(rng, 0, 2, 0, 1);
        const InnerFunction g = random_inner(rng, 0, 2, 0, 1);
        const InnerFunction h1 = h0.product(g);
        const InnerFunction q = inner_quotient(h0, h1);
        for (int j = 0; j < 32; ++j) {
            const cplx z = random_disk_point(rng, 0.9);
            out.worst_quotient_residual = std::max(
                out.worst_quotient_residual, std::abs(q.eval(z) * h0.eval(z) - h1.eval(z)));
        }
    }
    (void)cfg;
    return out;
}

// ---------------------------------------------------------------------------
// outer reconstruction battery (acceptance criterion 12)

struct OuterBattery {
    double worst_rebuild = 0.0; // |g(z) - (2+z)| over probe points
    double worst_inner = 0.0;   // |inner_handle(z) - z| for z(2+z)
    bool all_pass() const { return worst_rebuild <= 1e-8 && worst_inner <= 1e-4; }
};

inline OuterBattery run_outer_battery(const RunConfig& cfg) {
    OuterBattery out;
    std::mt19937_64 rng(cfg.seed);
    const BoundaryGrid grid(4096);
    std::vector<double> values(grid.size());
    for (int j = 0; j < grid.size(); ++j) values[j] = std::abs(2.0 + grid.point(j));
    const OuterFunction g = outer_from_modulus(BoundaryModulus::from_values(grid, values));
    for (int i = 0; i < 32; ++i) {
        const cplx z = random_disk_point(rng, 0.9);
        out.worst_rebuild = std::max(out.worst_rebuild, std::abs(g.eval(z) - (2.0 + z)));
    }
    const Factorization fac = factorize(make_handle([](cplx z) { return z * (2.0 + z); }));
    for (int i = 0; i < 32; ++i) {
        const cplx z = random_disk_point(rng, 0.9);
        out.worst_inner = std::max(out.worst_inner, std::abs(fac.inner(z) - z));
    }
    return out;
}

// ---------------------------------------------------------------------------
// dispatcher

inline std::vector<std::string> suite_names() {
    return {"lindelof", "frostman", "littlewood", "dirichlet-mult", "axioms", "distance",
            "smirnov"};
}

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg,
                             const std::string& axiom_norm = "", int axiom_nmax = 200) {
    if (name == "lindelof") return run_lindelof(cfg);
    if (name == "frostman") return run_frostman(cfg);
    if (name == "littlewood") return run_littlewood(cfg);
    if (name == "dirichlet-mult") return run_dirichlet_mult(cfg);
    if (name == "axioms") return run_axioms(cfg, axiom_norm, axiom_nmax);
    if (name == "distance") return run_distance(cfg);
    if (name == "smirnov") return run_smirnov(cfg);
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + name + "'; available: " + known);
}

} // namespace disklab::suites

#endif
