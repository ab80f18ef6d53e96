#include "qrlab/sector_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrlab {

cplx sector_boundary_value(double beta, double t) {
    constexpr double pi = std::numbers::pi;
    if (!(beta > 0.0 && beta < pi / 2))
        throw std::domain_error("sector_boundary_value: beta must lie in (0, pi/2)");
    if (t == 0.0)
        throw std::domain_error("sector_boundary_value: t = 0 is the boundary singularity");
    if (!(std::abs(t) <= pi))
        throw std::domain_error("sector_boundary_value: t outside [-pi, pi]");
    const double c = 2.0 * beta / pi;
    const double modulus = std::pow(std::abs(1.0 / std::tan(t / 2)), c);
    const double argument = (t > 0 ? beta : -beta);
    return std::polar(modulus, argument);
}

ComplexSeries sector_series(double beta, int degree) {
    constexpr double pi = std::numbers::pi;
    if (!(beta > 0.0 && beta < pi / 2))
        throw std::domain_error("sector_series: beta must lie in (0, pi/2)");
    if (degree < 0) throw std::invalid_argument("sector_series: negative degree");
    const double c = 2.0 * beta / pi;
    std::vector<cplx> a(static_cast<std::size_t>(degree) + 1, cplx(0.0));
    a[0] = 1.0;
    if (degree >= 1) a[1] = 2.0 * c;
    for (int j = 1; j < degree; ++j)
        a[j + 1] = (2.0 * c * a[j] + static_cast<double>(j - 1) * a[j - 1]) /
                   static_cast<double>(j + 1);
    return ComplexSeries(std::move(a));
}

}  // namespace qrlab
