#pragma once

#include "qrlab/complex_series.hpp"

namespace qrlab {

// Conformal map of the disk onto the sector {|arg w| < beta}:
//     S_beta(z) = ((1+z)/(1-z))^{2 beta / pi},  principal branch.
//
// On the unit circle z = e^{it} this collapses to the closed form
//     S_beta(e^{it}) = (i cot(t/2))^{2 beta / pi},
// with modulus |cot(t/2)|^{2 beta/pi} and argument sign(t) * beta.
// The map carries the boundary onto the two sector edges a.e.; t = 0 is the
// blow-up point (image of z = 1).

// Requires beta in (0, pi/2) and t in [-pi, pi] \ {0}.
cplx sector_boundary_value(double beta, double t);

// Taylor coefficients of S_beta from (1 - z^2) S' = (4 beta / pi) S:
//     (j+1) a_{j+1} = 2c a_j + (j-1) a_{j-1},  c = 2 beta / pi,  a_0 = 1.
ComplexSeries sector_series(double beta, int degree);

}  // namespace qrlab
