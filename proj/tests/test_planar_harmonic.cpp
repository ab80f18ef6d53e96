#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrlab/identities.hpp"
#include "qrlab/planar_harmonic.hpp"
#include "qrlab/sector_map.hpp"

using namespace qrlab;
using std::numbers::pi;

namespace {

double uni(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PlanarHarmonicMap random_map(std::mt19937_64& rng, int degree) {
    std::vector<cplx> g(static_cast<std::size_t>(degree) + 1), h(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double scale = 1.0 / ((j + 1.0) * (j + 1.0));   // same decay as the random family
        g[j] = scale * cplx(2.0 * uni(rng) - 1.0, 2.0 * uni(rng) - 1.0);
        h[j] = 0.3 * scale * cplx(2.0 * uni(rng) - 1.0, 2.0 * uni(rng) - 1.0);
    }
    return {ComplexSeries(g), ComplexSeries(h)};
}

const ComplexSeries kZ({cplx(0.0), cplx(1.0)});

}  // namespace

TEST_CASE("map evaluation") {
    const MapValue v1 = eval_map({kZ, ComplexSeries()}, cplx(0.0, 1.0));
    CHECK(v1.f == cplx(0.0, 1.0));
    CHECK(v1.u == 0.0);
    CHECK(v1.v == 1.0);

    const MapValue v2 = eval_map({kZ, ComplexSeries({cplx(0.0), cplx(0.5)})}, cplx(1.0));
    CHECK(std::abs(v2.f - cplx(1.5)) < 1e-15);

    const MapValue v3 =
        eval_map({kZ, ComplexSeries({cplx(0.0), cplx(0.0), cplx(0.2)})}, cplx(0.5));
    CHECK(std::abs(v3.f - cplx(0.55)) < 1e-15);
}

TEST_CASE("dilatation") {
    CHECK(dilatation({kZ, ComplexSeries({cplx(0.0), cplx(0.3)})}, cplx(0.2, 0.1)) ==
          doctest::Approx(0.3).epsilon(1e-14));
    CHECK(dilatation({kZ, ComplexSeries()}, cplx(0.5)) == 0.0);

    const ComplexSeries z2({cplx(0.0), cplx(0.0), cplx(1.0)});
    const ComplexSeries z2s({cplx(0.0), cplx(0.0), cplx(0.2)});
    CHECK(dilatation({z2, z2s}, cplx(0.5)) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(dilatation({z2, z2s}, cplx(0.0)), std::domain_error);
}

TEST_CASE("qr_bound on reference maps") {
    const QrBound b1 = qr_bound({kZ, ComplexSeries({cplx(0.0), cplx(0.3)})}, 8, 64);
    CHECK(b1.k_sup == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(b1.K == doctest::Approx(13.0 / 7.0).epsilon(1e-14));

    const QrBound b2 = qr_bound({kZ, ComplexSeries()}, 8, 64);
    CHECK(b2.k_sup == 0.0);
    CHECK(b2.K == 1.0);

    // omega = 0.3 z attains its sup on the boundary circle.
    const PlanarHarmonicMap m = make_qr_map(kZ, ComplexSeries({cplx(0.0), cplx(0.3)}));
    const QrBound b3 = qr_bound(m, 8, 64);
    CHECK(b3.k_sup == doctest::Approx(0.3).epsilon(1e-13));

    CHECK_THROWS_AS(qr_bound({kZ, kZ}, 8, 64), std::domain_error);   // |h'|/|g'| = 1
}

TEST_CASE("qr_bound never decreases under grid refinement") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const PlanarHarmonicMap m =
            make_qr_map(ComplexSeries({cplx(1.0), cplx(0.2, 0.1)}),
                        ComplexSeries({cplx(0.1 * uni(rng)), cplx(0.5 * uni(rng))}));
        const double coarse = qr_bound(m, 4, 32).k_sup;
        const double fine = qr_bound(m, 8, 64).k_sup;
        CHECK(fine >= coarse - 1e-15);
    }
}

TEST_CASE("make_qr_map produces h with dilatation |omega|") {
    const PlanarHarmonicMap m1 = make_qr_map(kZ, ComplexSeries({cplx(0.4)}));
    CHECK(m1.h.coeff(1) == cplx(0.4));

    const ComplexSeries z2({cplx(0.0), cplx(0.0), cplx(1.0)});
    const PlanarHarmonicMap m2 = make_qr_map(z2, ComplexSeries({cplx(0.4)}));
    CHECK(std::abs(m2.h.coeff(2) - cplx(0.4)) < 1e-15);

    const PlanarHarmonicMap m3 = make_qr_map(kZ, ComplexSeries({cplx(0.0), cplx(0.4)}));
    CHECK(std::abs(m3.h.coeff(2) - cplx(0.2)) < 1e-15);

    CHECK_THROWS_AS(make_qr_map(kZ, ComplexSeries({cplx(1.0)})), std::domain_error);

    std::mt19937_64 rng(9);
    const PlanarHarmonicMap m =
        make_qr_map(ComplexSeries({cplx(0.5), cplx(1.0), cplx(0.0, 0.3)}),
                    ComplexSeries({cplx(0.2, 0.1), cplx(0.3)}));
    const ComplexSeries omega({cplx(0.2, 0.1), cplx(0.3)});
    for (int i = 0; i < 50; ++i) {
        const cplx z = std::polar(0.95 * uni(rng), 2.0 * pi * uni(rng));
        CHECK(std::abs(dilatation(m, z) - std::abs(omega.eval(z))) < 1e-12);
    }
}

TEST_CASE("grad_u_squared closed forms and stencil oracle") {
    CHECK(grad_u_squared({kZ, ComplexSeries()}, cplx(0.3, -0.2)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(grad_u_squared({kZ, ComplexSeries({cplx(0.0), cplx(0.5)})}, cplx(0.1, 0.4)) ==
          doctest::Approx(2.25).epsilon(1e-14));

    std::mt19937_64 rng(17);
    const PlanarHarmonicMap m = random_map(rng, 6);
    const cplx z(0.3, 0.2);
    const double step = 1e-4;
    auto u = [&](cplx w) { return eval_map(m, w).u; };
    const double ux = (u(z + cplx(step)) - u(z - cplx(step))) / (2.0 * step);
    const double uy = (u(z + cplx(0.0, step)) - u(z - cplx(0.0, step))) / (2.0 * step);
    const double fd = ux * ux + uy * uy;
    CHECK(std::abs(grad_u_squared(m, z) - fd) <= 1e-6 * (1.0 + fd));
}

TEST_CASE("harmonicity of u and v by stencil") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const PlanarHarmonicMap m = random_map(rng, static_cast<int>(rng() % 9));
        for (int i = 0; i < 20; ++i) {
            const cplx z = std::polar(0.8 * uni(rng), 2.0 * pi * uni(rng));
            const double lap_u =
                finite_diff_laplacian([&](cplx w) { return eval_map(m, w).u; }, z, 1e-3);
            const double lap_v =
                finite_diff_laplacian([&](cplx w) { return eval_map(m, w).v; }, z, 1e-3);
            CHECK(std::abs(lap_u) <= 1e-5);
            CHECK(std::abs(lap_v) <= 1e-5);
        }
    }
}

TEST_CASE("range check against the negative axis") {
    CHECK(range_avoids_negative_axis({ComplexSeries({cplx(2.0), cplx(1.0)}), ComplexSeries()},
                                     16, 64));
    CHECK_FALSE(range_avoids_negative_axis({kZ, ComplexSeries()}, 16, 64));

    // Sector-based map with small reflection keeps Re f > 0.
    const double beta = pi / 6;
    const ComplexSeries gb = sector_series(beta, 40);
    const PlanarHarmonicMap f{gb, cplx(-0.1) * gb};
    CHECK(range_avoids_negative_axis(f, 16, 64));
}

TEST_CASE("initial angle") {
    CHECK(*initial_angle({ComplexSeries({cplx(1.0), cplx(1.0)}), ComplexSeries()}) == 0.0);
    CHECK(*initial_angle({ComplexSeries({cplx(0.0, 1.0), cplx(1.0)}), ComplexSeries()}) ==
          doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK_FALSE(initial_angle({kZ, ComplexSeries()}).has_value());
}

TEST_CASE("K and k conversions are mutually inverse") {
    for (int i = 0; i <= 9; ++i) {
        const double k = 0.1 * i;
        const double K = (1.0 + k) / (1.0 - k);
        CHECK(std::abs((K - 1.0) / (K + 1.0) - k) <= 1e-14);
    }
}
