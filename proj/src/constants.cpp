#include "qrlab/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#if defined(QRLAB_HAVE_FLOAT128)
#include <quadmath.h>
#endif

namespace qrlab {
namespace constants {

namespace {

void require_p(double p) {
    if (!(p > 1.0 && p <= 2.0))
        throw std::domain_error("constants: p must lie in (1, 2]");
}

void require_K(double K) {
    if (!(K >= 1.0)) throw std::domain_error("constants: K must be >= 1");
}

}  // namespace

PichoridesAB pichorides_AB(double p) {
    require_p(p);
    const double a = std::numbers::pi / (2.0 * p);
    // tan^{p-1}(a)/cot(a) = tan^p(a); the simplified form avoids the
    // cancellation of the quotient when p approaches 1.
    return {std::pow(std::tan(a), p), std::pow(std::sin(a), p - 1.0) / std::cos(a)};
}

VerbitskyCD verbitsky_CD(double p) {
    require_p(p);
    const double a = std::numbers::pi / (2.0 * p);
    return {std::pow(std::cos(a), -p), std::tan(a)};
}

double c_theorem1(int n, double K, double p) {
    require_p(p);
    require_K(K);
    if (n < 2) throw std::domain_error("c_theorem1: n must be >= 2");
    const double radicand =
        (1.0 + (n - 1) * K * K) * (1.0 + (p - 2.0) / (n * K * K)) / (p - 1.0);
    if (!(radicand > 0.0)) throw std::domain_error("c_theorem1: nonpositive radicand");
    return std::pow(radicand, 1.0 / p);
}

double c_theorem2(double p, double K) {
    require_p(p);
    require_K(K);
    const PichoridesAB ab = pichorides_AB(p);
    return std::pow(ab.A + (K * K - 1.0) * ab.B, 1.0 / p);
}

double d_theorem2(double p, double K) {
    require_p(p);
    require_K(K);
    const VerbitskyCD cd = verbitsky_CD(p);
    return std::pow(cd.C + (K * K - 1.0) * cd.D, 1.0 / p);
}

Classical classical_constants(double p) {
    if (!(p > 1.0)) throw std::domain_error("classical_constants: p must exceed 1");
    const double pbar = std::max(p, p / (p - 1.0));
    const double a = std::numbers::pi / (2.0 * pbar);
    return {1.0 / std::cos(a), 1.0 / std::sin(a), std::cos(a) / std::sin(a), pbar};
}

InitialCondition initial_condition_ok(std::optional<double> theta, double p, double k) {
    require_p(p);
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("initial_condition_ok: k must lie in [0, 1)");
    if (!theta) return {true, true};
    const double th = *theta;
    if (!(th > -std::numbers::pi - 1e-15 && th <= std::numbers::pi + 1e-15))
        throw std::domain_error("initial_condition_ok: theta outside (-pi, pi]");
    const double general =
        std::cos(p * th) + 4.0 * k / ((1.0 - k) * (1.0 - k)) * std::pow(std::abs(std::cos(th)), p);
    // Roundoff slack: boundary cases like cos(p pi) = 0 must not flip sign.
    return {general >= -1e-12, std::abs(th) < std::numbers::pi / (2.0 * p)};
}

namespace hi {

#if defined(QRLAB_HAVE_FLOAT128)
using real = __float128;
namespace f {
inline real pi() { return M_PIq; }
inline real tan(real x) { return tanq(x); }
inline real sin(real x) { return sinq(x); }
inline real cos(real x) { return cosq(x); }
inline real pow(real x, real y) { return powq(x, y); }
}  // namespace f
#else
using real = long double;
namespace f {
inline real pi() { return 3.141592653589793238462643383279502884L; }
inline real tan(real x) { return std::tan(x); }
inline real sin(real x) { return std::sin(x); }
inline real cos(real x) { return std::cos(x); }
inline real pow(real x, real y) { return std::pow(x, y); }
}  // namespace f
#endif

namespace {
real A_hi(real p) { return f::pow(f::tan(f::pi() / (2 * p)), p); }
real B_hi(real p) {
    const real a = f::pi() / (2 * p);
    return f::pow(f::sin(a), p - 1) / f::cos(a);
}
real C_hi(real p) { return f::pow(f::cos(f::pi() / (2 * p)), -p); }
real D_hi(real p) { return f::tan(f::pi() / (2 * p)); }
}  // namespace

double pichorides_A(double p) { return static_cast<double>(A_hi(p)); }
double pichorides_B(double p) { return static_cast<double>(B_hi(p)); }
double verbitsky_C(double p) { return static_cast<double>(C_hi(p)); }
double verbitsky_D(double p) { return static_cast<double>(D_hi(p)); }

double c_theorem1(int n, double K, double p) {
    const real Kq = K, pq = p;
    const real rad = (1 + (n - 1) * Kq * Kq) * (1 + (pq - 2) / (n * Kq * Kq)) / (pq - 1);
    return static_cast<double>(f::pow(rad, 1 / pq));
}

double c_theorem2(double p, double K) {
    const real Kq = K, pq = p;
    return static_cast<double>(f::pow(A_hi(pq) + (Kq * Kq - 1) * B_hi(pq), 1 / pq));
}

double d_theorem2(double p, double K) {
    const real Kq = K, pq = p;
    return static_cast<double>(f::pow(C_hi(pq) + (Kq * Kq - 1) * D_hi(pq), 1 / pq));
}

}  // namespace hi

}  // namespace constants
}  // namespace qrlab
