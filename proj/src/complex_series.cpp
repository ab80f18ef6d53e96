#include "qrlab/complex_series.hpp"

#include <stdexcept>

namespace qrlab {

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
}

ComplexSeries ComplexSeries::monomial(int degree, cplx scale) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx(0.0));
    c.back() = scale;
    return ComplexSeries(std::move(c));
}

cplx ComplexSeries::coeff(int j) const {
    if (j < 0) throw std::invalid_argument("coeff: negative index");
    if (j > degree()) return cplx(0.0);
    return coeffs_[static_cast<std::size_t>(j)];
}

cplx ComplexSeries::eval(cplx z) const {
    cplx acc = coeffs_.back();
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) acc = acc * z + coeffs_[j];
    return acc;
}

ComplexSeries ComplexSeries::derivative() const {
    if (coeffs_.size() == 1) return ComplexSeries({cplx(0.0)});
    std::vector<cplx> out(coeffs_.size() - 1);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = static_cast<double>(j + 1) * coeffs_[j + 1];
    return ComplexSeries(std::move(out));
}

ComplexSeries ComplexSeries::antiderivative() const {
    std::vector<cplx> out(coeffs_.size() + 1, cplx(0.0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        out[j + 1] = coeffs_[j] / static_cast<double>(j + 1);
    return ComplexSeries(std::move(out));
}

bool ComplexSeries::is_zero() const {
    for (const cplx& c : coeffs_)
        if (c != cplx(0.0)) return false;
    return true;
}

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
    std::vector<cplx> out(std::max(a.coeffs().size(), b.coeffs().size()), cplx(0.0));
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (j < a.coeffs().size()) out[j] += a.coeffs()[j];
        if (j < b.coeffs().size()) out[j] += b.coeffs()[j];
    }
    return ComplexSeries(std::move(out));
}

ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
    return a + (cplx(-1.0) * b);
}

ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b) {
    std::vector<cplx> out(a.coeffs().size() + b.coeffs().size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return ComplexSeries(std::move(out));
}

ComplexSeries operator*(cplx s, const ComplexSeries& a) {
    std::vector<cplx> out = a.coeffs();
    for (cplx& c : out) c *= s;
    return ComplexSeries(std::move(out));
}

}  // namespace qrlab
