#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "disklab/blaschke.hpp"
#include "disklab/inner.hpp"
#include "disklab/outer.hpp"
#include "oracles.hpp"

using namespace disklab;

namespace {
BoundaryModulus sampled_modulus(int n, const std::function<double(double)>& G) {
    const BoundaryGrid g(n);
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = G(g.angle(j));
    return BoundaryModulus::from_values(g, vals);
}
} // namespace

TEST_CASE("constant boundary data gives constant outer functions") {
    const OuterFunction one = outer_from_modulus(sampled_modulus(64, [](double) { return 1.0; }));
    CHECK(std::abs(one.eval(cplx(0.3, 0.2)) - cplx(1.0)) < 1e-14);

    const OuterFunction k = outer_from_modulus(sampled_modulus(64, [](double) { return 2.75; }));
    CHECK(std::abs(k.eval(cplx(-0.4, 0.1)) - cplx(2.75)) < 1e-13);
    CHECK(k.value_at_zero() == Catch::Approx(2.75));
}

TEST_CASE("outer reconstruction of 2+z from its boundary modulus") {
    const OuterFunction g = outer_from_modulus(
        sampled_modulus(4096, [](double t) { return std::abs(2.0 + std::polar(1.0, t)); }));
    // zero-free with positive value at 0, so 2+z is its own outer part
    CHECK(g.value_at_zero() == Catch::Approx(2.0).epsilon(1e-12));
    auto rng = oracles::test_rng(97);
    for (int i = 0; i < 32; ++i) {
        const cplx z = oracles::random_disk_point(rng, 0.9);
        CHECK(std::abs(g.eval(z) - (2.0 + z)) < 1e-8);
    }
    // taylor route agrees
    const TaylorSeries t = g.taylor(8);
    CHECK(std::abs(t.coeff(0) - 2.0) < 1e-10);
    CHECK(std::abs(t.coeff(1) - 1.0) < 1e-10);
    CHECK(std::abs(t.coeff(2)) < 1e-10);
}

TEST_CASE("boundary modulus is reproduced as r -> 1") {
    const int n = 2048;
    const BoundaryGrid grid(n);
    const OuterFunction g = outer_from_modulus(
        sampled_modulus(n, [](double t) { return std::abs(2.0 + std::polar(1.0, t)); }));
    double worst_far = 0.0, worst_near = 0.0;
    for (int j = 0; j < n; j += 16) {
        const double target = std::abs(2.0 + grid.point(j));
        worst_far = std::max(worst_far, std::abs(std::abs(g.eval(0.9 * grid.point(j))) -
                                                 std::abs(2.0 + 0.9 * grid.point(j))));
        worst_near = std::max(worst_near,
                              std::abs(std::abs(g.eval(0.9999 * grid.point(j))) - target));
    }
    CHECK(worst_far < 1e-10);  // matches the harmonic extension well inside
    CHECK(worst_near < 1e-3);  // approaches the data near the boundary
}

TEST_CASE("outer part depends on the modulus only") {
    const int n = 512;
    const BoundaryGrid grid(n);
    std::vector<double> from_f(n), from_uf(n);
    const cplx u = std::polar(1.0, 0.8361);
    for (int j = 0; j < n; ++j) {
        const cplx f = 2.0 + grid.point(j);
        from_f[j] = std::abs(f);
        from_uf[j] = std::abs(u * f);
    }
    const OuterFunction g1 = outer_from_modulus(BoundaryModulus::from_values(grid, from_f));
    const OuterFunction g2 = outer_from_modulus(BoundaryModulus::from_values(grid, from_uf));
    auto rng = oracles::test_rng(101);
    for (int i = 0; i < 16; ++i) {
        const cplx z = oracles::random_disk_point(rng, 0.8);
        CHECK(std::abs(g1.eval(z) - g2.eval(z)) < 1e-12);
    }
}

TEST_CASE("constructed outer functions are positive at the origin") {
    auto rng = oracles::test_rng(103);
    std::uniform_real_distribution<double> uni(0.2, 3.0);
    for (int rep = 0; rep < 10; ++rep) {
        const double base = uni(rng) + 1.5, amp = 0.8 * (base - 0.2);
        const OuterFunction g = outer_from_modulus(sampled_modulus(
            256, [&](double t) { return base + amp * std::cos(t + rep); }));
        CHECK(g.value_at_zero() > 0.0);
    }
}

TEST_CASE("outer evaluation stays on the closed disk") {
    const OuterFunction g = outer_from_modulus(sampled_modulus(64, [](double) { return 2.0; }));
    CHECK_THROWS_AS(g.eval(cplx(1.5, 0.0)), std::invalid_argument);
    CHECK(std::abs(g.eval(cplx(1.0, 0.0)) - cplx(2.0)) < 1e-12); // boundary itself is fine here
}

TEST_CASE("boundary modulus validation") {
    const BoundaryGrid g(16);
    CHECK_THROWS_AS(BoundaryModulus::from_values(g, std::vector<double>{1.0}),
                    std::invalid_argument);
    std::vector<double> with_zero(16, 1.0);
    with_zero[3] = 0.0;
    CHECK_THROWS_AS(BoundaryModulus::from_values(g, with_zero), std::invalid_argument);
}

TEST_CASE("factorize recognizes outer functions") {
    Handle f = make_handle([](cplx z) { return 2.0 + z; });
    const Factorization fac = factorize(f);
    CHECK(fac.inner_residual < 1e-6);
    auto rng = oracles::test_rng(107);
    for (int i = 0; i < 16; ++i) {
        const cplx z = oracles::random_disk_point(rng, 0.9);
        CHECK(std::abs(fac.inner(z) - cplx(1.0)) < 1e-5);
        CHECK(std::abs(fac.outer.eval(z) - (2.0 + z)) < 1e-5);
    }
}

TEST_CASE("factorize recovers the inner factor z of z(2+z)") {
    Handle f = make_handle([](cplx z) { return z * (2.0 + z); });
    const Factorization fac = factorize(f);
    auto rng = oracles::test_rng(109);
    for (int i = 0; i < 32; ++i) {
        const cplx z = oracles::random_disk_point(rng, 0.9);
        CHECK(std::abs(fac.inner(z) - z) < 1e-4);
    }
    // samples slightly inside the boundary
    const BoundaryGrid grid(256);
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const cplx z = (1.0 - 1e-3) * grid.point(j);
        worst = std::max(worst, std::abs(fac.inner(z) - z));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("factorize flags 1/S as far from Smirnov") {
    // f = exp((1+z)/(1-z)) = 1/S blows up radially; no bounded inner part
    Handle f = make_handle([](cplx z) { return std::exp((1.0 + z) / (1.0 - z)); },
                           [](cplx z) { return ((1.0 + z) / (1.0 - z)).real(); });
    const Factorization fac = factorize(f);
    CHECK(fac.inner_residual > 0.5);
}

TEST_CASE("factorize rejects boundary samples near zero") {
    Handle f = make_handle([](cplx z) { return z - cplx(1.0 - 1e-6); });
    CHECK_THROWS_AS(factorize(f), std::invalid_argument);
}

TEST_CASE("composition with inner functions stays factorizable") {
    // f = 2+z has positive real part, hence outer; f o h stays in the class
    auto rng = oracles::test_rng(113);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<cplx> zeros(1 + rep % 3);
        for (auto& a : zeros) a = oracles::random_disk_point(rng, 0.7);
        const FiniteBlaschke h(UnimodularConstant(), zeros);
        Handle fh = make_handle([h](cplx z) { return 2.0 + h.eval(z); });
        CHECK(factorize(fh).inner_residual < 1e-3);
    }
}

TEST_CASE("smirnov diagnostic separates the three regimes") {
    const BoundaryGrid grid(4096);
    const RadialLadder ladder = RadialLadder::dyadic(14);

    // bounded by one: identically zero score
    Handle bounded{InnerFunction(FiniteBlaschke::mobius(cplx(0.5)))};
    const auto rb = smirnov_diagnostic(bounded, ladder, grid);
    CHECK(rb.score <= 1e-12);
    CHECK(rb.verdict == SmirnovVerdict::Stable);

    // outer, unbounded, but uniformly integrable: tails stabilize
    Handle pole = make_handle([](cplx z) { return 1.0 / (1.0 - z); });
    const auto rp = smirnov_diagnostic(pole, ladder, grid);
    CHECK(rp.verdict == SmirnovVerdict::Stable);
    CHECK(std::abs(rp.last_ratio - 1.0) < 0.10);

    // reciprocal singular inner: tail doubles rung over rung
    const SingularInner s(SingularMeasure({{0.0, 1.0}}));
    Handle recip = make_handle([s](cplx z) { return 1.0 / s.eval(z); },
                               [s](cplx z) { return -s.log_abs(z); });
    const auto rs = smirnov_diagnostic(recip, ladder, grid);
    CHECK(rs.verdict == SmirnovVerdict::Diverging);
    CHECK(rs.rung_tails.back() > 2.0 * rs.rung_tails[rs.rung_tails.size() - 2] * 0.9);

    // a bounded composition through the atom also stays stable
    Handle comp = make_handle([s](cplx z) { return 2.0 + s.eval(z); });
    CHECK(smirnov_diagnostic(comp, ladder, grid).verdict == SmirnovVerdict::Stable);
}
