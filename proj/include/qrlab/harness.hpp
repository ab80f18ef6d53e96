#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/ball_harmonic.hpp"
#include "qrlab/identities.hpp"
#include "qrlab/planar_harmonic.hpp"
#include "qrlab/quadrature.hpp"
#include "qrlab/report.hpp"

namespace qrlab {
namespace harness {

// Grid scan of a pointwise trigonometric inequality over [-pi, pi].
struct PointwiseScan {
    double min_value = 0.0;   // minimum of the inequality gap
    double argmin = 0.0;
    double max_abs = 0.0;     // largest |gap|; at p = 2 both expressions are identities
    bool extension_ok = true; // cos(p(pi - x)) >= cos(p x) on [pi/2, pi] (Pichorides only)
};

// A(p)|cos x|^p - B(p)cos(px) - |sin x|^p over a uniform grid, n_grid >= 1000.
PointwiseScan verify_pointwise_pichorides(double p, int n_grid);

// C(p)|cos t|^p - D(p)cos(pt) - 1 over the same kind of grid.
PointwiseScan verify_pointwise_verbitsky(double p, int n_grid);

// ||f||_p <= c_2(K, p) ||Re f||_p for K-quasiregular f with Im f(0) = 0.
VerificationReport check_theorem1_plane(const PlanarHarmonicMap& m, double p,
                                        const QuadratureSpec& spec);

// ||f||_p^p <= |f(0)|^p + c_n(K, p)^p (||f_1||_p^p - |f_1(0)|^p) for the
// linear family on the unit ball; quadrature path requires n = 3.
VerificationReport check_theorem1_ball(const LinearBallMap& map, double p,
                                       const QuadratureSpec& spec);

// ||Im f||_p <= c(K,p) ||Re f||_p and ||f||_p <= d(K,p) ||Re f||_p, gated on
// the initial-angle and range hypotheses; returns the a) and b) reports.
// Reports with failed hypotheses are marked NOT-APPLICABLE, the inequality is
// still measured for information.
std::vector<VerificationReport> check_theorem2(const PlanarHarmonicMap& m, double p,
                                               const QuadratureSpec& spec);

struct SharpnessProbe {
    double measured_ratio = 0.0;   // ||Im f||_p / ||Re f||_p from boundary integrals
    double bound = 0.0;            // c(K, p)
    double gap = 0.0;              // bound - measured_ratio
    double u_norm = 0.0;
    double v_norm = 0.0;
    double beta = 0.0;
    double K = 1.0;
    bool range_ok = true;          // hypothesis checks on the truncated interior map
    bool angle_ok = true;
};

// Sharpness probe with f = S_beta - k conj(S_beta), beta = beta_fraction *
// pi/(2p).  Boundary integrals use the closed-form sector values on a t-grid
// geometrically refined toward the singularity at t = 0 (64 levels, closed
// power-law tail below the innermost level), so no truncation error enters
// the ratio; truncation_degree only controls the interior hypothesis grid.
SharpnessProbe sharpness_probe(double p, double k, double beta_fraction, int truncation_degree,
                               const QuadratureSpec& spec);

// Deterministic pseudo-random K-quasiregular polynomial maps: g has
// coefficients uniform in the centered complex unit square scaled by
// 1/(j+1)^2, omega is k_max times a uniform point of the closed unit disk
// (constant for even samples, linear for odd ones).  With positive_real_part
// a real constant 1.1 * grid-max |g| is added to g's constant term.
std::vector<PlanarHarmonicMap> random_qr_family(std::uint64_t seed, int count, int degree,
                                                double k_max, bool positive_real_part = false);

// Zeroes Im f(0) (Theorem 2.1 a) hypothesis) by adjusting g's constant term.
PlanarHarmonicMap with_real_initial_value(PlanarHarmonicMap m);

// Equality case of the ball theorem at the identity map: ||I||_2 =
// c_n(1,2) ||I_1||_2 with c_n(1,2) = sqrt(n), closed form for every n and a
// sphere-quadrature cross-check for n = 3.
VerificationReport equality_case_identity(int n);

// Full acceptance battery (criteria 1-9); deterministic for a fixed seed.
struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool all_pass = true;
};
SuiteResult run_suite(std::uint64_t seed);

}  // namespace harness
}  // namespace qrlab
