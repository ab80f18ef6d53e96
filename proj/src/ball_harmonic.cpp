#include "qrlab/ball_harmonic.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qrlab {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return dot(a, a); }

}  // namespace

void LinearBallMap::validate() const {
    if (n < 2) throw std::invalid_argument("LinearBallMap: dimension must be >= 2");
    if (A.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("LinearBallMap: A must hold n*n row-major entries");
    if (b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("LinearBallMap: b must hold n entries");
}

std::vector<double> LinearBallMap::apply(std::span<const double> x) const {
    std::vector<double> y(b.begin(), b.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += A[static_cast<std::size_t>(i) * n + j] * x[j];
    return y;
}

SingularNorms singular_norms(std::span<const double> A, int n) {
    if (n < 1 || A.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("singular_norms: A must be n x n");
    // Column-major working copy; one-sided Jacobi rotates column pairs until
    // all columns are mutually orthogonal, after which the column norms are
    // the singular values.
    std::vector<double> w(A.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(j) * n + i] = A[static_cast<std::size_t>(i) * n + j];
    auto col = [&](int j) { return std::span<double>(w).subspan(static_cast<std::size_t>(j) * n, n); };

    const double tol = 1e-15;
    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                auto cp = col(p), cq = col(q);
                const double app = norm2(cp), aqq = norm2(cq), apq = dot(cp, cq);
                if (std::abs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
                for (int i = 0; i < n; ++i) {
                    const double vp = cp[i], vq = cq[i];
                    cp[i] = c * vp - s * vq;
                    cq[i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double s2 = norm2(col(j));
        sum += s2;
        lo = std::min(lo, s2);
        hi = std::max(hi, s2);
    }
    return {std::sqrt(hi), std::sqrt(lo), std::sqrt(sum)};
}

double qr_constant_linear(std::span<const double> A, int n) {
    const SingularNorms s = singular_norms(A, n);
    if (s.ell <= 1e-14 * s.op)
        throw std::domain_error("qr_constant_linear: singular matrix has no finite K");
    return s.op / s.ell;
}

double poisson_kernel(std::span<const double> x, std::span<const double> eta) {
    const std::size_t n = x.size();
    if (n < 2 || eta.size() != n)
        throw std::invalid_argument("poisson_kernel: dimension mismatch or n < 2");
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double di = x[i] - eta[i];
        d2 += di * di;
    }
    return (1.0 - norm2(x)) / std::pow(std::sqrt(d2), static_cast<double>(n));
}

double sphere_surface_area(int n) {
    if (n < 2) throw std::invalid_argument("sphere_surface_area: n < 2");
    return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

double green_function(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw std::invalid_argument("green_function: dimension mismatch or n < 2");
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double di = x[i] - y[i];
        d2 += di * di;
    }
    if (d2 == 0.0) throw std::domain_error("green_function: coincident points");
    if (n == 2) {
        const std::complex<double> zx(x[0], x[1]), zy(y[0], y[1]);
        return std::log(std::abs(1.0 - zx * std::conj(zy)) / std::sqrt(d2)) /
               (2.0 * std::numbers::pi);
    }
    const double cn = 1.0 / ((n - 2) * sphere_surface_area(static_cast<int>(n)));
    const double aux = 1.0 + norm2(x) * norm2(y) - 2.0 * dot(x, y);
    const double half = (2.0 - static_cast<double>(n)) / 2.0;
    return cn * (std::pow(d2, half) - std::pow(aux, half));
}

}  // namespace qrlab
