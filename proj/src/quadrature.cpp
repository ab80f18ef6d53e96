#include "qrlab/quadrature.hpp"

#include <map>
#include <mutex>

namespace qrlab {

namespace {

// Newton iteration on P_n; nodes mapped from (-1, 1) to (0, 1).
std::pair<std::vector<double>, std::vector<double>> build_gl01(int n) {
    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    for (int i = 0; i < n; ++i) {
        x[i] = 0.5 * (x[i] + 1.0);
        w[i] *= 0.5;
    }
    return {std::move(x), std::move(w)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be positive");
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gl01(n)).first;
    return it->second;
}

RadialRule radial_rule(int n, int gamma) {
    const auto& [s, ws] = gauss_legendre_01(n);
    RadialRule out;
    out.r.resize(s.size());
    out.w.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.r[i] = std::pow(s[i], gamma);
        out.w[i] = ws[i] * gamma * std::pow(s[i], gamma - 1);
    }
    return out;
}

double max_radial_gap(const RadialRule& rule) {
    double gap = rule.r.empty() ? 1.0 : rule.r.front();
    for (std::size_t i = 1; i < rule.r.size(); ++i)
        gap = std::max(gap, rule.r[i] - rule.r[i - 1]);
    if (!rule.r.empty()) gap = std::max(gap, 1.0 - rule.r.back());
    return gap;
}

SphereRule sphere_rule_3d(const QuadratureSpec& spec) {
    spec.validate();
    const auto& [s, ws] = gauss_legendre_01(spec.n_radial);
    SphereRule rule;
    const int na = spec.n_angles;
    rule.points.reserve(s.size() * static_cast<std::size_t>(na));
    rule.weights.reserve(rule.points.capacity());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double ct = 2.0 * s[i] - 1.0;                    // cos(theta) in (-1, 1)
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double wp = ws[i];                               // GL on (0,1) sums to 1
        for (int j = 0; j < na; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / na;
            rule.points.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            rule.weights.push_back(wp / na);
        }
    }
    return rule;
}

}  // namespace qrlab
