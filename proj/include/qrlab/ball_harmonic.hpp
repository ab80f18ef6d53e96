#pragma once

#include <span>
#include <vector>

namespace qrlab {

// Linear harmonic map x -> A x + b of the unit ball in R^n.  Df is the
// constant matrix A, so quasiregularity constants are exact and every norm of
// Df reduces to singular-value data.
struct LinearBallMap {
    std::vector<double> A;   // row-major, n*n entries
    std::vector<double> b;   // n entries
    int n = 0;

    void validate() const;   // throws on inconsistent sizes or n < 2
    std::vector<double> apply(std::span<const double> x) const;   // A x + b
};

struct SingularNorms {
    double op;        // largest singular value, |Df|
    double ell;       // smallest singular value, l(Df)
    double hilbert;   // sqrt(sum of squared singular values), ||Df||
};

// One-sided Jacobi orthogonalization of the columns of A; exact to roundoff
// for the small n used here.
SingularNorms singular_norms(std::span<const double> A, int n);

// Least K with |A h| <= K l(A) |h|, i.e. op/ell.  Throws when A is singular
// (ell <= 1e-14 * op).
double qr_constant_linear(std::span<const double> A, int n);

// (1 - |x|^2) / |x - eta|^n for |x| < 1 and |eta| = 1.
double poisson_kernel(std::span<const double> x, std::span<const double> eta);

// Green function of the unit ball, positive for distinct interior points and
// vanishing when either argument reaches the boundary:
//   n  = 2 :  (1/2pi) log( |1 - x conj(y)| / |x - y| )   (complex notation)
//   n >= 3 :  c_n ( |x-y|^{2-n} - (1 + |x|^2 |y|^2 - 2<x,y>)^{(2-n)/2} ),
//             c_n = 1 / ((n-2) omega_{n-1}).
// Throws on coincident points.
double green_function(std::span<const double> x, std::span<const double> y);

// Surface area omega_{n-1} of the unit sphere in R^n (4 pi for n = 3).
double sphere_surface_area(int n);

}  // namespace qrlab
