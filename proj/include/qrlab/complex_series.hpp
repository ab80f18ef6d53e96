#pragma once

#include <complex>
#include <vector>

namespace qrlab {

using cplx = std::complex<double>;

// Finite power series  a_0 + a_1 z + ... + a_d z^d, evaluated on the closed
// unit disk.  Immutable after construction; all operations return new series.
class ComplexSeries {
public:
    ComplexSeries() : coeffs_{cplx(0.0)} {}
    explicit ComplexSeries(std::vector<cplx> coeffs);

    static ComplexSeries constant(cplx c) { return ComplexSeries({c}); }
    static ComplexSeries monomial(int degree, cplx scale = cplx(1.0));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int j) const;   // zero beyond the stored degree

    cplx eval(cplx z) const;   // Horner recurrence
    ComplexSeries derivative() const;       // degree drops by one, constants -> zero series
    ComplexSeries antiderivative() const;   // constant term exactly 0

    bool is_zero() const;

private:
    std::vector<cplx> coeffs_;   // invariant: nonempty
};

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b);  // convolution
ComplexSeries operator*(cplx s, const ComplexSeries& a);

}  // namespace qrlab
