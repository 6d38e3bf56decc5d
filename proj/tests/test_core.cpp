#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "disklab/core.hpp"
#include "oracles.hpp"

using namespace disklab;

TEST_CASE("mobius_eval basics") {
    // a = 0 collapses to -z
    CHECK(std::abs(mobius_eval(DiskPoint(0.0), cplx(0.3, 0.2)) - cplx(-0.3, -0.2)) < 1e-15);
    // the numerator vanishes at z = a
    CHECK(std::abs(mobius_eval(DiskPoint(cplx(0.4, 0.1)), cplx(0.4, 0.1))) < 1e-15);
    // involution at a fixed point pair
    const cplx w(0.2, -0.35);
    CHECK(std::abs(mobius_eval(DiskPoint(0.5), mobius_eval(DiskPoint(0.5), w)) - w) < 1e-14);
}

TEST_CASE("mobius_eval involution and boundary preservation, randomized") {
    auto rng = oracles::test_rng(101);
    for (int i = 0; i < 100; ++i) {
        const cplx a = oracles::random_disk_point(rng, 0.95);
        const cplx z = oracles::random_disk_point(rng, 0.999);
        CHECK(std::abs(mobius_eval(DiskPoint(a), mobius_eval(DiskPoint(a), z)) - z) < 1e-13);
        const cplx u = std::polar(1.0, std::arg(z));
        CHECK(std::abs(std::abs(mobius_eval(DiskPoint(a), u)) - 1.0) < 1e-14);
    }
}

TEST_CASE("DiskPoint and UnimodularConstant invariants") {
    CHECK_THROWS_AS(DiskPoint(cplx(1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(DiskPoint(cplx(0.8, 0.7)), std::invalid_argument);
    CHECK_THROWS_AS(UnimodularConstant(cplx(0.999999, 0.0)), std::invalid_argument);
    const UnimodularConstant c(std::polar(1.0, 1.2345));
    CHECK(std::abs(std::abs(c.value()) - 1.0) < 1e-16);
}

TEST_CASE("circle_mean exactness") {
    const BoundaryGrid g(16);
    std::vector<cplx> constant(16, cplx(2.5, -1.0));
    CHECK(std::abs(circle_mean(constant) - cplx(2.5, -1.0)) < 1e-15);

    std::vector<cplx> rotation(16);
    for (int j = 0; j < 16; ++j) rotation[j] = g.point(j);
    CHECK(std::abs(circle_mean(rotation)) < 1e-15);

    CHECK_THROWS_AS(circle_mean(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("circle_mean of |2+e^it| matches refined quadrature") {
    const BoundaryGrid g(4096);
    std::vector<double> samples(g.size());
    for (int j = 0; j < g.size(); ++j) samples[j] = std::abs(2.0 + g.point(j));
    const double mean = circle_mean(samples);
    const double fine =
        oracles::fine_circle_mean([](double t) { return std::abs(2.0 + std::polar(1.0, t)); });
    CHECK(std::abs(mean - fine) < 1e-10);
}

TEST_CASE("mean-value property of polynomial boundary samples") {
    auto rng = oracles::test_rng(77);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<cplx> coeffs(13);
        for (auto& c : coeffs) c = cplx(uni(rng), uni(rng));
        const BoundaryGrid g(16); // n exceeds the degree
        std::vector<cplx> samples(g.size());
        for (int j = 0; j < g.size(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * g.point(j) + coeffs[k];
            samples[j] = acc;
        }
        CHECK(std::abs(circle_mean(samples) - coeffs[0]) < 1e-12);
    }
}

TEST_CASE("radial_trace samples the expected circle") {
    const BoundaryGrid g(8);
    auto tr = radial_trace([](cplx z) { return z; }, g, 0.5);
    CHECK(std::abs(tr[0] - cplx(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(tr[2] - cplx(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(tr[4] - cplx(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(tr[6] - cplx(0.0, -0.5)) < 1e-15);
}

TEST_CASE("grid and ladder validation") {
    CHECK_THROWS_AS(BoundaryGrid(4), std::invalid_argument);
    CHECK_THROWS_AS(RadialLadder({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(RadialLadder({0.5, 1.0}), std::invalid_argument);
    const RadialLadder ladder = RadialLadder::dyadic(20);
    CHECK(ladder.size() == 20);
    CHECK(ladder.radii().front() == 0.5);
    CHECK(std::abs(ladder.back() - (1.0 - std::ldexp(1.0, -20))) < 1e-18);
}

TEST_CASE("parallel_for is deterministic across thread counts") {
    std::vector<double> serial(1000), threaded(1000);
    auto body = [](int i) { return std::sin(0.1 * i) * std::sqrt(i + 1.0); };
    parallel_for(1000, 1, [&](int i) { serial[i] = body(i); });
    parallel_for(1000, 7, [&](int i) { threaded[i] = body(i); });
    CHECK(serial == threaded);
}
