#ifndef DISKLAB_CONFIG_HPP
#define DISKLAB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "core.hpp"

namespace disklab {

/// Thresholds used by the preserver pipeline and the verification suites.
/// All overridable by name (CLI --tol name=value).
struct Tolerances {
    double innerness = 1e-3;                // boundary modulus deviation per entry
    double innerness_excess = 1e-6;         // tolerated |h| - 1 overshoot (maximum principle)
    double relation = 1e-3;                 // boundary ratio-relation residual
    double reconstruction_canonical = 1e-6; // h_k vs psi phi^k, canonical route
    double reconstruction_numeric = 1e-4;   // same, pointwise-division route
    double frostman = 5e-2;                 // scan flag threshold
    double arc_deficit = 1e-4;              // predicted modulus deficit that excludes a grid point
    double lindelof_arc = 1e-2;             // fixed angular exclusion around atoms (radians)
    double lindelof_stability = 1e-3;       // radial trace counts as stabilized below this deficit
    double alias_cutoff = 1e-6;             // jensen rungs kept while r^n stays below this
    double phi_constancy = 1e-8;            // probe variance below this means constant phi
    double littlewood_slack = 1e-8;
    double dirichlet_tail = 1e-6;

    void set(const std::string& name, double value) {
        if (name == "innerness") innerness = value;
        else if (name == "innerness-excess") innerness_excess = value;
        else if (name == "relation") relation = value;
        else if (name == "reconstruction-canonical") reconstruction_canonical = value;
        else if (name == "reconstruction-numeric") reconstruction_numeric = value;
        else if (name == "frostman") frostman = value;
        else if (name == "arc-deficit") arc_deficit = value;
        else if (name == "lindelof-arc") lindelof_arc = value;
        else if (name == "lindelof-stability") lindelof_stability = value;
        else if (name == "alias-cutoff") alias_cutoff = value;
        else if (name == "phi-constancy") phi_constancy = value;
        else if (name == "littlewood-slack") littlewood_slack = value;
        else if (name == "dirichlet-tail") dirichlet_tail = value;
        else throw std::invalid_argument("unknown tolerance name: " + name);
    }
};

/// Run-wide configuration. Defaults are the documented desk-scale values;
/// randomized suites additionally require an explicit seed.
struct RunConfig {
    int grid_n = 4096;
    int ladder_kmax = 20;       // rungs 1 - 2^{-k}, k = 1..kmax
    int trunc = 200;            // default series truncation order
    double boundary_r = 1.0 - 1e-6;
    double test_r = 1.0 - 1e-4;
    std::uint64_t seed = 0;
    int threads = 1;
    Tolerances tol;

    BoundaryGrid grid() const { return BoundaryGrid(grid_n); }
    RadialLadder ladder() const { return RadialLadder::dyadic(ladder_kmax); }
};

} // namespace disklab

#endif
