#pragma once

#include <optional>

#include "qrlab/complex_series.hpp"

namespace qrlab {

// Planar harmonic map f = g + conj(h) with holomorphic parts g, h stored as
// finite series.  u = Re f and v = Im f are the harmonic conjugate data the
// Riesz-type inequalities compare.
struct PlanarHarmonicMap {
    ComplexSeries g;
    ComplexSeries h;
};

struct MapValue {
    cplx f;
    double u;
    double v;
};

MapValue eval_map(const PlanarHarmonicMap& m, cplx z);

// |h'(z)| / |g'(z)|.  Throws when |g'(z)| < 1e-14 (degenerate point).
double dilatation(const PlanarHarmonicMap& m, cplx z);

struct QrBound {
    double k_sup;   // sup of the dilatation over the polar grid, in [0, 1)
    double K;       // (1 + k_sup) / (1 - k_sup)
};

// Grid supremum of the dilatation over r_i = i/n_radii (i = 1..n_radii, so the
// boundary circle is included) and t_j = 2 pi j / n_angles.  For polynomial
// omega = h'/g' with zero-free g' the boundary grid already certifies the sup
// by the maximum principle; interior radii are scanned as a safety net.
// Throws when k_sup >= 1 - 1e-12 (not quasiregular) or on a degenerate node.
QrBound qr_bound(const PlanarHarmonicMap& m, int n_radii, int n_angles);

// Builds h = antiderivative(omega * g') so that dilatation == |omega|.
// Rejects omega with grid-sup |omega| >= 1.
PlanarHarmonicMap make_qr_map(const ComplexSeries& g, const ComplexSeries& omega);

// |grad Re f|^2 = |g'(z) + h'(z)|^2.
double grad_u_squared(const PlanarHarmonicMap& m, cplx z);

struct RangeCheck {
    bool ok;          // no grid point with Re f <= -margin and |Im f| <= margin
    bool hit_zero;    // some grid point with |f| <= margin (flagged, not failed)
    cplx worst;       // offending or nearest-to-axis value, for report evidence
};

RangeCheck range_check(const PlanarHarmonicMap& m, int n_radii, int n_angles,
                       double margin = 1e-9);

// Heuristic certificate for f(D) avoiding the closed negative real axis.
bool range_avoids_negative_axis(const PlanarHarmonicMap& m, int n_radii, int n_angles,
                                double margin = 1e-9);

// Principal argument of f(0); nullopt when f(0) = 0, which satisfies every
// angular hypothesis (the relevant lower bound |f(0)|^p cos(p theta) is then 0).
std::optional<double> initial_angle(const PlanarHarmonicMap& m);

}  // namespace qrlab
