#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "disklab/fourier.hpp"
#include "disklab/roots.hpp"
#include "disklab/taylor.hpp"
#include "oracles.hpp"

using namespace disklab;

namespace {
bool contains_root(const std::vector<cplx>& roots, cplx z, double tol) {
    for (const cplx& r : roots)
        if (std::abs(r - z) < tol) return true;
    return false;
}
} // namespace

TEST_CASE("polynomial_roots on simple and clustered cases") {
    // z^2 - 1/4
    auto rr = polynomial_roots({cplx(-0.25), cplx(0.0), cplx(1.0)});
    REQUIRE(rr.roots.size() == 2);
    CHECK(contains_root(rr.roots, cplx(0.5), 1e-12));
    CHECK(contains_root(rr.roots, cplx(-0.5), 1e-12));

    // (z-0.3)^2 (z+0.5i): a double root
    Poly p = poly_mul(poly_mul({cplx(-0.3), cplx(1.0)}, {cplx(-0.3), cplx(1.0)}),
                      {cplx(0.0, 0.5), cplx(1.0)});
    rr = polynomial_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(contains_root(rr.roots, cplx(0.0, -0.5), 1e-10));
    int near = 0;
    for (const cplx& r : rr.roots)
        if (std::abs(r - cplx(0.3)) < 1e-6) ++near;
    CHECK(near == 2);
}

TEST_CASE("polynomial_roots residuals on random polynomials") {
    auto rng = oracles::test_rng(5);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        Poly p(9);
        for (auto& c : p) c = cplx(uni(rng), uni(rng));
        p.back() += cplx(1.5, 0.0); // keep the leading coefficient honest
        auto rr = polynomial_roots(p);
        REQUIRE(rr.roots.size() == 8);
        CHECK(rr.max_residual < 1e-10);
    }
}

TEST_CASE("taylor arithmetic basics") {
    const TaylorSeries z = TaylorSeries::monomial(1);
    const TaylorSeries f = taylor_add(TaylorSeries::constant(1.0), z); // 1 + z
    const TaylorSeries f2 = taylor_mul(f, f, 8);                      // (1+z)^2
    CHECK(std::abs(f2.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(f2.coeff(1) - 2.0) < 1e-15);
    CHECK(std::abs(f2.coeff(2) - 1.0) < 1e-15);
    CHECK(f2.order() <= 8);

    // truncation discards, evaluation is Horner
    CHECK(std::abs(f2.eval(cplx(0.5)) - 2.25) < 1e-15);
    CHECK(f2.truncated(1).order() == 1);
}

TEST_CASE("taylor_exp against log(1+z) series") {
    // exp(log(1+z)) = 1+z
    const int K = 40;
    std::vector<cplx> lg(K + 1, cplx(0.0));
    for (int m = 1; m <= K; ++m) lg[m] = (m % 2 ? 1.0 : -1.0) / static_cast<double>(m);
    const TaylorSeries e = taylor_exp(TaylorSeries(std::move(lg)), K);
    CHECK(std::abs(e.coeff(0) - 1.0) < 1e-14);
    CHECK(std::abs(e.coeff(1) - 1.0) < 1e-14);
    for (int m = 2; m <= K; ++m) CHECK(std::abs(e.coeff(m)) < 1e-13);
}

TEST_CASE("taylor_compose_poly matches pointwise composition") {
    auto rng = oracles::test_rng(17);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<cplx> fc(6), gc(7);
    for (auto& c : fc) c = cplx(uni(rng), uni(rng));
    for (auto& c : gc) c = 0.1 * cplx(uni(rng), uni(rng)); // keep g small on the disk
    const TaylorSeries f{std::vector<cplx>(fc)}, g{std::vector<cplx>(gc)};
    const TaylorSeries comp = taylor_compose_poly(f, g, 64);
    for (int i = 0; i < 20; ++i) {
        const cplx z = oracles::random_disk_point(rng, 0.8);
        CHECK(std::abs(comp.eval(z) - f.eval(g.eval(z))) < 1e-12);
    }
}

TEST_CASE("trailing coefficient trim") {
    TaylorSeries t({cplx(1.0), cplx(2.0), cplx(0.0), cplx(0.0)});
    CHECK(t.order() == 1);
    TaylorSeries all_zero({cplx(0.0), cplx(0.0)});
    CHECK(all_zero.order() == 0);
}

TEST_CASE("fft matches the naive transform") {
    auto rng = oracles::test_rng(23);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<cplx> samples(16);
    for (auto& s : samples) s = cplx(uni(rng), uni(rng));
    auto fast = fourier_coefficients(std::span<const cplx>(samples));
    // naive reference
    for (int m = 0; m < 16; ++m) {
        cplx acc = 0.0;
        for (int j = 0; j < 16; ++j)
            acc += samples[j] * std::polar(1.0, -two_pi * m * j / 16.0);
        CHECK(std::abs(fast[m] - acc / 16.0) < 1e-13);
    }
    // non power-of-two path
    std::vector<cplx> s12(samples.begin(), samples.begin() + 12);
    auto slow = fourier_coefficients(std::span<const cplx>(s12));
    cplx acc = 0.0;
    for (int j = 0; j < 12; ++j) acc += s12[j] * std::polar(1.0, -two_pi * 3.0 * j / 12.0);
    CHECK(std::abs(slow[3] - acc / 12.0) < 1e-13);
}
