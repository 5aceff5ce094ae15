#ifndef HECKECONV_QUADRATURE_HPP
#define HECKECONV_QUADRATURE_HPP

#include "heckeconv/complex.hpp"
#include <map>
#include <vector>

namespace heckeconv {

struct GaussLegendreRule {
    std::vector<Real> nodes;   // on (-1, 1)
    std::vector<Real> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n, cached per
// (order, working precision).
inline const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<std::pair<int, unsigned>, GaussLegendreRule> cache;
    auto key = std::make_pair(n, Real::default_precision());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    Real tol = ldexp(Real(1), -static_cast<long>(Real::default_precision() * 3.2));
    for (int i = 0; i < n; ++i) {
        Real x = cos(const_pi() * (i + Real(0.75)) / (n + Real(0.5)));
        Real p1, dp;
        for (int iter = 0; iter < 200; ++iter) {
            Real p0 = 1;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < tol) {
                // one polishing pass after convergence
                if (iter > 0) break;
            }
        }
        {
            Real p0 = 1;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

// integral of f over [a, b] with one n-point panel
template <typename F>
auto gl_panel(const F& f, const Real& a, const Real& b, int n) {
    const auto& rule = gauss_legendre(n);
    Real mid = (a + b) / 2, half = (b - a) / 2;
    auto acc = f(mid + half * rule.nodes[0]) * (rule.weights[0] * half);
    for (int i = 1; i < n; ++i)
        acc += f(mid + half * rule.nodes[i]) * (rule.weights[i] * half);
    return acc;
}

// adaptive bisection: accept a panel when 16-pt and 24-pt values agree
template <typename F>
Complex gl_adaptive(const F& f, const Real& a, const Real& b, const Real& tol, int depth = 0) {
    Complex lo = gl_panel(f, a, b, 16);
    Complex hi = gl_panel(f, a, b, 24);
    if (abs(hi - lo) <= tol || depth >= 28) return hi;
    Real mid = (a + b) / 2;
    return gl_adaptive(f, a, mid, tol / 2, depth + 1) +
           gl_adaptive(f, mid, b, tol / 2, depth + 1);
}

} // namespace heckeconv

#endif
