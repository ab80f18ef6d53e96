#include "qrlab/planar_harmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qrlab {

namespace {
constexpr double kDegenerate = 1e-14;
constexpr double kQrMargin = 1e-12;
}  // namespace

MapValue eval_map(const PlanarHarmonicMap& m, cplx z) {
    const cplx f = m.g.eval(z) + std::conj(m.h.eval(z));
    return {f, f.real(), f.imag()};
}

double dilatation(const PlanarHarmonicMap& m, cplx z) {
    const cplx gp = m.g.derivative().eval(z);
    if (std::abs(gp) < kDegenerate)
        throw std::domain_error("dilatation: |g'(z)| below 1e-14 (degenerate point)");
    return std::abs(m.h.derivative().eval(z)) / std::abs(gp);
}

QrBound qr_bound(const PlanarHarmonicMap& m, int n_radii, int n_angles) {
    if (n_radii < 1 || n_angles < 1)
        throw std::invalid_argument("qr_bound: grid counts must be positive");
    const ComplexSeries gp = m.g.derivative();
    const ComplexSeries hp = m.h.derivative();
    double k_sup = 0.0;
    for (int i = 1; i <= n_radii; ++i) {
        const double r = static_cast<double>(i) / n_radii;
        for (int j = 0; j < n_angles; ++j) {
            const double t = 2.0 * std::numbers::pi * j / n_angles;
            const cplx z = std::polar(r, t);
            const double ag = std::abs(gp.eval(z));
            const double ah = std::abs(hp.eval(z));
            if (ag < kDegenerate) {
                if (ah < kDegenerate) continue;   // constant map contributes k = 0
                throw std::domain_error("qr_bound: degenerate grid point, |g'| < 1e-14 at r=" +
                                        std::to_string(r));
            }
            k_sup = std::max(k_sup, ah / ag);
        }
    }
    if (k_sup >= 1.0 - kQrMargin)
        throw std::domain_error("qr_bound: dilatation supremum reaches 1, map not quasiregular");
    return {k_sup, (1.0 + k_sup) / (1.0 - k_sup)};
}

PlanarHarmonicMap make_qr_map(const ComplexSeries& g, const ComplexSeries& omega) {
    // Boundary grid certifies sup |omega| for polynomial omega; a few interior
    // radii are scanned anyway, mirroring qr_bound.
    double sup = 0.0;
    for (int i = 1; i <= 8; ++i) {
        const double r = i / 8.0;
        for (int j = 0; j < 512; ++j) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 512);
            sup = std::max(sup, std::abs(omega.eval(z)));
        }
    }
    if (sup >= 1.0)
        throw std::domain_error("make_qr_map: grid-sup of |omega| >= 1");
    return {g, (omega * g.derivative()).antiderivative()};
}

double grad_u_squared(const PlanarHarmonicMap& m, cplx z) {
    return std::norm(m.g.derivative().eval(z) + m.h.derivative().eval(z));
}

RangeCheck range_check(const PlanarHarmonicMap& m, int n_radii, int n_angles, double margin) {
    RangeCheck out{true, false, cplx(0.0)};
    double worst_re = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_radii; ++i) {
        const double r = static_cast<double>(i) / n_radii;
        const int jmax = (i == 0) ? 1 : n_angles;   // center once
        for (int j = 0; j < jmax; ++j) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / n_angles);
            const cplx f = eval_map(m, z).f;
            if (std::abs(f) <= margin) out.hit_zero = true;
            const bool near_axis = !(f.real() > -margin) && !(std::abs(f.imag()) > margin);
            if (near_axis && out.ok) {
                out.ok = false;
                out.worst = f;
            }
            if (out.ok && std::abs(f.imag()) <= margin && f.real() < worst_re) {
                worst_re = f.real();
                out.worst = f;
            }
        }
    }
    return out;
}

bool range_avoids_negative_axis(const PlanarHarmonicMap& m, int n_radii, int n_angles,
                                double margin) {
    return range_check(m, n_radii, n_angles, margin).ok;
}

std::optional<double> initial_angle(const PlanarHarmonicMap& m) {
    const cplx f0 = eval_map(m, cplx(0.0)).f;
    if (f0 == cplx(0.0)) return std::nullopt;
    return std::arg(f0);
}

}  // namespace qrlab
