#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "qrlab/planar_harmonic.hpp"
#include "qrlab/quadrature.hpp"

namespace qrlab {

// Decreasing sequence of regularization parameters for w_eps = sqrt(eps^2 + u^2).
struct RegularizationSchedule {
    std::vector<double> eps;

    static RegularizationSchedule standard();   // 2^-j, j = 0..20
    void validate() const;                      // strictly decreasing, positive
};

// Delta |f|^p = p(p-2) |f|^{p-4} |g' conj(f) + h' f|^2
//             + 2p |f|^{p-2} (|g'|^2 + |h'|^2),
// using d/dz |f|^2 = g' conj(f) + h' f so the gradient term is exact.
// Throws when |f(z)| <= 1e-10.
double laplacian_abs_f_p(const PlanarHarmonicMap& m, cplx z, double p);

// Delta |u|^p = p(p-1) |g' + h'|^2 |u|^{p-2}.  Throws when |u(z)| <= 1e-10.
double laplacian_abs_u_p(const PlanarHarmonicMap& m, cplx z, double p);

// Delta Re(f^p) = p(p-1) Re( f^{p-2} * 4 g' conj(h') ), principal powers.
// Throws when f(z) lies on the closed negative real axis or |f(z)| <= 1e-10.
double laplacian_re_f_p(const PlanarHarmonicMap& m, cplx z, double p);

// Second-order central stencils; both throw when the stencil leaves the unit
// disk/ball.
double finite_diff_laplacian(const std::function<double(cplx)>& phi, cplx x, double step);
double finite_diff_laplacian_3d(const std::function<double(std::array<double, 3>)>& phi,
                                std::array<double, 3> x, double step);

struct GreenIdentityResult {
    double lhs = 0.0;            // boundary side of the verified identity
    double rhs = 0.0;            // |center|^p + Green-weighted Laplacian integral
    double residual = 0.0;       // |lhs - rhs| / (1 + |lhs|)
    double eps_used = 0.0;       // 0 marks the unregularized direct evaluation
    bool schedule_converged = false;   // successive integrals differed by < 1e-9
    bool regularized_path = false;     // u vanishes on the grid: identity checked for w_eps
    double u_norm_p = 0.0;       // ||u||_p^p at r = 1 (always reported)
    double u0_abs_p = 0.0;       // |u(0)|^p
    double limit_integral = 0.0; // Green integral at the last trusted eps
    long degraded_nodes = 0;     // nodes with |u| < 1e-10
    std::vector<double> schedule_eps;
    std::vector<double> schedule_integrals;
    bool monotone = false;       // integrals monotone along the walked schedule
    int direction = 0;           // +1 increasing as eps decreases, -1 decreasing, 0 flat
};

// Checks the Green-potential identity
//   ||u||_p^p = |u(0)|^p + (1/2pi) int_D Delta(w^p) log(1/|z|) dA
// through the regularization w_eps = sqrt(eps^2 + u^2), whose exact Laplacian
//   Delta w_eps^p = p (eps^2 + u^2)^{(p-4)/2} (eps^2 + (p-1) u^2) |grad u|^2
// is what the schedule integrates.  When u stays away from zero on the grid
// (or p = 2) the schedule converges and the unregularized identity is
// reported.  When u vanishes inside the disk and p < 2, the limit integrand is
// unbounded along the zero set and no fixed grid can integrate it to
// tolerance, so both sides are instead compared at the smallest grid-resolved
// eps of the schedule; the schedule prefix still exhibits the monotone
// approach to the limit.
GreenIdentityResult green_identity_residual_plane(const PlanarHarmonicMap& m, double p,
                                                  const QuadratureSpec& spec,
                                                  const RegularizationSchedule& schedule);

// Node values of u and |grad u|^2 are p-independent; precomputing them once
// per map lets a sweep over several p reuse the expensive part.
class DiskGreenCache {
public:
    DiskGreenCache(const PlanarHarmonicMap& m, const QuadratureSpec& spec);
    ~DiskGreenCache();
    DiskGreenCache(DiskGreenCache&&) noexcept;
    DiskGreenCache& operator=(DiskGreenCache&&) noexcept;

    const QuadratureSpec& spec() const { return spec_; }

private:
    friend GreenIdentityResult green_identity_residual_plane(const DiskGreenCache&, double,
                                                             const RegularizationSchedule&);
    struct Impl;
    std::unique_ptr<Impl> impl_;
    QuadratureSpec spec_;
};

GreenIdentityResult green_identity_residual_plane(const DiskGreenCache& cache, double p,
                                                  const RegularizationSchedule& schedule);

// True when the schedule's Green-weighted integrals are monotone over the
// trusted prefix (they increase toward the limit when u has zeros, decrease
// when u is bounded away from zero, and are constant at p = 2).
bool eps_monotonicity_check(const PlanarHarmonicMap& m, double p, const QuadratureSpec& spec,
                            const RegularizationSchedule& schedule);

// Green representation w(x) = int_S P(x,.) w dsigma - int G(x,.) Delta w dV
// for a manufactured solution on the disk.  The Green integral is pulled back
// through the Moebius involution phi_x(w) = (x - w)/(1 - conj(x) w), which
// recenters the kernel and leaves a smooth integrand for the product rule.
// Requires |x| <= 0.8.
double green_representation_residual_disk(const std::function<double(double)>& boundary,
                                          const std::function<double(cplx)>& forcing,
                                          const std::function<double(cplx)>& solution, cplx x,
                                          const QuadratureSpec& spec);

// Quadratic Taylor data of the forcing at the evaluation point; exact for the
// polynomial forcings the manufactured solutions use.
struct Taylor2 {
    double value = 0.0;
    std::array<double, 3> grad{};
    std::array<std::array<double, 3>, 3> hess{};
};

// Ball analogue (n = 3).  The Green integral splits into closed-form moments
// of the quadratic Taylor part (exact solutions of Delta u = polynomial with
// zero boundary data) plus a quadrature of the subtracted remainder, which is
// bounded near y = x.  Requires |x| <= 0.8.
double green_representation_residual_ball(
    const std::function<double(std::array<double, 3>)>& boundary,
    const std::function<double(std::array<double, 3>)>& forcing, const Taylor2& forcing_at_x,
    const std::function<double(std::array<double, 3>)>& solution, std::array<double, 3> x,
    const QuadratureSpec& spec);

}  // namespace qrlab
