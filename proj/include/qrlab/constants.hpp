#pragma once

#include <optional>

namespace qrlab {
namespace constants {

// Every closed-form constant below is proved for p in (1, 2]; queries outside
// that range are rejected rather than extrapolated.

struct PichoridesAB {
    double A;   // tan^p(pi/2p)   (algebraically simplified from tan^{p-1}/cot)
    double B;   // sin^{p-1}(pi/2p) / cos(pi/2p)
};
PichoridesAB pichorides_AB(double p);

struct VerbitskyCD {
    double C;   // cos(pi/2p)^{-p}
    double D;   // tan(pi/2p)
};
VerbitskyCD verbitsky_CD(double p);

// p-th root of (1 + (n-1) K^2)(1 + (p-2)/(n K^2)) / (p-1).
double c_theorem1(int n, double K, double p);

// (A(p) + (K^2 - 1) B(p))^{1/p}.
double c_theorem2(double p, double K);

// (C(p) + (K^2 - 1) D(p))^{1/p}.
double d_theorem2(double p, double K);

struct Classical {
    double sec_c;
    double csc_c;
    double cot_c;
    double pbar;   // max{p, p/(p-1)}
};
Classical classical_constants(double p);   // requires p > 1 only

struct InitialCondition {
    bool general_ok;   // cos(p theta) + (4k/(1-k)^2) |cos theta|^p >= 0
    bool strict_ok;    // |theta| < pi/(2p)
};
// theta = nullopt encodes f(0) = 0, which satisfies every angular hypothesis.
InitialCondition initial_condition_ok(std::optional<double> theta, double p, double k);

// Slow high-precision path (float128 when the toolchain provides it, long
// double otherwise) used to cross-check the double-precision forms.
namespace hi {
double pichorides_A(double p);
double pichorides_B(double p);
double verbitsky_C(double p);
double verbitsky_D(double p);
double c_theorem1(int n, double K, double p);
double c_theorem2(double p, double K);
double d_theorem2(double p, double K);
}  // namespace hi

}  // namespace constants
}  // namespace qrlab
