#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qrlab/ball_harmonic.hpp"
#include "qrlab/quadrature.hpp"

using namespace qrlab;
using std::numbers::pi;

namespace {

double uni(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Test oracle: two-sided cyclic Jacobi eigen-iteration on the symmetric
// matrix A^T A, independent of the one-sided route in the library.
std::vector<double> singular_values_oracle(const std::vector<double>& A, int n) {
    std::vector<double> S(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += A[static_cast<std::size_t>(k) * n + i] * A[static_cast<std::size_t>(k) * n + j];
            S[static_cast<std::size_t>(i) * n + j] = s;
        }
    auto at = [&](int i, int j) -> double& { return S[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (at(p, q) == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * at(p, q), at(q, q) - at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double vp = at(p, k), vq = at(q, k);
                    at(p, k) = c * vp - s * vq;
                    at(q, k) = s * vp + c * vq;
                }
                for (int k = 0; k < n; ++k) {
                    const double vp = at(k, p), vq = at(k, q);
                    at(k, p) = c * vp - s * vq;
                    at(k, q) = s * vp + c * vq;
                }
            }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, at(i, i)));
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

TEST_CASE("singular norms of diagonal references") {
    const SingularNorms s1 = singular_norms(std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1}, 3);
    CHECK(s1.op == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s1.ell == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s1.hilbert == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    const SingularNorms s2 = singular_norms(std::vector<double>{2, 0, 0, 1}, 2);
    CHECK(s2.op == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s2.ell == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s2.hilbert == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));

    const SingularNorms s3 = singular_norms(std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 3}, 3);
    CHECK(s3.op == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(s3.ell == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s3.hilbert == doctest::Approx(std::sqrt(11.0)).epsilon(1e-15));
}

TEST_CASE("singular norms agree with the Jacobi-rotation oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<double> A(static_cast<std::size_t>(n) * n);
        for (auto& v : A) v = 4.0 * uni(rng) - 2.0;
        const SingularNorms got = singular_norms(A, n);
        const std::vector<double> want = singular_values_oracle(A, n);
        CHECK(std::abs(got.ell - want.front()) <= 1e-12 * (1.0 + want.back()));
        CHECK(std::abs(got.op - want.back()) <= 1e-12 * (1.0 + want.back()));
        double sum = 0.0;
        for (double s : want) sum += s * s;
        CHECK(std::abs(got.hilbert - std::sqrt(sum)) <= 1e-12 * (1.0 + std::sqrt(sum)));
        // |Df|^2 >= ||Df||^2 / n: largest eigenvalue against the trace of Df^T Df.
        CHECK(got.op * got.op >= got.hilbert * got.hilbert / n - 1e-12);
    }
}

TEST_CASE("qr constant of linear maps") {
    CHECK(qr_constant_linear(std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1}, 3) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(qr_constant_linear(std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 2}, 3) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(qr_constant_linear(std::vector<double>{0, 0, 0, 0, 0, 0, 0, 0, 0}, 3),
                    std::domain_error);

    // Orthogonal invariance: K(QA) = K(A) for a product of Givens rotations.
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3;
        std::vector<double> A(9);
        for (auto& v : A) v = 2.0 * uni(rng) - 1.0;
        double K0;
        try {
            K0 = qr_constant_linear(A, n);
        } catch (const std::domain_error&) {
            continue;
        }
        std::vector<double> QA = A;
        for (int rot = 0; rot < 3; ++rot) {
            const int p = rot, q = (rot + 1) % 3;
            const double th = 2.0 * pi * uni(rng), c = std::cos(th), s = std::sin(th);
            for (int j = 0; j < 3; ++j) {
                const double vp = QA[static_cast<std::size_t>(p) * 3 + j];
                const double vq = QA[static_cast<std::size_t>(q) * 3 + j];
                QA[static_cast<std::size_t>(p) * 3 + j] = c * vp - s * vq;
                QA[static_cast<std::size_t>(q) * 3 + j] = s * vp + c * vq;
            }
        }
        CHECK(qr_constant_linear(QA, n) == doctest::Approx(K0).epsilon(1e-12));
    }
}

TEST_CASE("linear map quasiregularity equality |Df| = K l(Df)") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> A(9);
        for (auto& v : A) v = 2.0 * uni(rng) - 1.0;
        const SingularNorms s = singular_norms(A, 3);
        if (s.ell <= 1e-12) continue;
        const double K = qr_constant_linear(A, 3);
        CHECK(s.op <= K * s.ell * (1.0 + 1e-13));
        CHECK(s.op >= K * s.ell * (1.0 - 1e-13));
    }
}

TEST_CASE("poisson kernel") {
    const std::vector<double> zero{0.0, 0.0, 0.0};
    const std::vector<double> eta{0.0, 0.0, 1.0};
    CHECK(poisson_kernel(zero, eta) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<double> x2{0.5, 0.0}, e2{1.0, 0.0};
    CHECK(poisson_kernel(x2, e2) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("poisson kernel has unit mean over the sphere") {
    QuadratureSpec spec;
    spec.n_angles = 128;
    spec.n_radial = 64;
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        const double r = 0.8 * uni(rng);
        const double th = pi * uni(rng), ph = 2.0 * pi * uni(rng);
        const std::array<double, 3> x{r * std::sin(th) * std::cos(ph),
                                      r * std::sin(th) * std::sin(ph), r * std::cos(th)};
        const double mean = sphere_mean_3d(
            [&](const std::array<double, 3>& eta) {
                return poisson_kernel(std::span<const double>(x.data(), 3),
                                      std::span<const double>(eta.data(), 3));
            },
            spec);
        CHECK(std::abs(mean - 1.0) <= 1e-10);
    }
}

TEST_CASE("green function boundary vanishing, positivity, symmetry") {
    std::mt19937_64 rng(71);

    // n = 2: |1 - x conj(y)| = |x - y| when |y| = 1.
    for (int trial = 0; trial < 20; ++trial) {
        const double t = 2.0 * pi * uni(rng);
        const std::vector<double> y{std::cos(t), std::sin(t)};
        const std::vector<double> x{0.9 * (2.0 * uni(rng) - 1.0), 0.9 * (2.0 * uni(rng) - 1.0)};
        if (x[0] * x[0] + x[1] * x[1] >= 1.0) continue;
        CHECK(std::abs(green_function(x, y)) <= 1e-14);
    }

    // n = 3 boundary vanishing and the cited center value.
    for (int trial = 0; trial < 20; ++trial) {
        const double th = pi * uni(rng), ph = 2.0 * pi * uni(rng);
        const std::vector<double> y{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                    std::cos(th)};
        const std::vector<double> x{0.4, -0.2, 0.3};
        CHECK(std::abs(green_function(x, y)) <= 1e-14);
    }
    const std::vector<double> origin{0.0, 0.0, 0.0}, half{0.5, 0.0, 0.0};
    CHECK(green_function(origin, half) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));

    for (int n : {2, 3}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> x(static_cast<std::size_t>(n)), y(x.size());
            double rx = 0.0, ry = 0.0;
            for (int i = 0; i < n; ++i) {
                x[static_cast<std::size_t>(i)] = 2.0 * uni(rng) - 1.0;
                y[static_cast<std::size_t>(i)] = 2.0 * uni(rng) - 1.0;
                rx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
                ry += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
            }
            if (rx >= 0.96 || ry >= 0.96) continue;
            const double g1 = green_function(x, y);
            CHECK(g1 > 0.0);
            CHECK(std::abs(g1 - green_function(y, x)) <= 1e-13 * (1.0 + std::abs(g1)));
        }
    }

    CHECK_THROWS_AS(green_function(origin, origin), std::domain_error);
}

TEST_CASE("sphere surface area") {
    CHECK(sphere_surface_area(2) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK(sphere_surface_area(3) == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(sphere_surface_area(4) == doctest::Approx(2.0 * pi * pi).epsilon(1e-14));
}

TEST_CASE("linear ball map validation and application") {
    LinearBallMap map{{1, 0, 0, 0, 1, 0, 0, 0, 2}, {0.1, 0.0, -0.2}, 3};
    map.validate();
    const std::array<double, 3> x{0.2, 0.3, 0.1};
    const std::vector<double> y = map.apply(std::span<const double>(x.data(), 3));
    CHECK(y[0] == doctest::Approx(0.3));
    CHECK(y[2] == doctest::Approx(0.0));

    LinearBallMap bad{{1, 0, 0, 1}, {0, 0}, 3};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
