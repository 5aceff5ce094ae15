#ifndef HECKECONV_BESSEL_HPP
#define HECKECONV_BESSEL_HPP

#include "heckeconv/gamma.hpp"

namespace heckeconv {

namespace detail {

// ascending series (x/2)^nu sum (-1)^m (x^2/4)^m / (m! Gamma(nu+m+1));
// evaluated with enough extra bits to absorb the ~e^x alternating peak
inline Real bessel_series(const PrecisionContext& ctx, const Real& nu_, const Real& x_) {
    unsigned extra = static_cast<unsigned>(0.44 * x_.convert_to<double>()) + 8;
    PrecisionContext boosted = ctx.with_digits(ctx.working_digits() + extra);
    Real out;
    {
        PrecisionScope scope(boosted);
        Real nu_b = snap(nu_), x_b = snap(x_);
        Real q = x_b * x_b / 4;
        Real term = pow_positive(x_b / 2, Complex(nu_b)).re / gamma(boosted, Complex(nu_b + 1)).re;
        Real acc = term;
        Real eps = boosted.series_epsilon();
        Real peak = abs(term);
        for (unsigned long m = 1; m < ctx.max_series_terms(); ++m) {
            term *= -q / (Real(m) * (nu_b + Real(m)));
            acc += term;
            peak = std::max(peak, abs(term));
            if (abs(term) < eps * (abs(acc) + peak)) { out = acc; break; }
            if (m + 1 == ctx.max_series_terms())
                throw precision_error("bessel_j: series stalled");
        }
    }
    PrecisionScope scope(ctx);
    return Real(out);
}

// large-argument asymptotics:
//   J_nu(x) = sqrt(2/(pi x)) [ cos w * P(nu,x) - sin w * Q(nu,x) ],
//   w = x - nu pi/2 - pi/4,  a_k = prod (4nu^2-(2j-1)^2) / (k! 8^k)
// returns false if the minimal term cannot reach the target
inline bool bessel_asymptotic(const PrecisionContext& ctx, const Real& nu, const Real& x,
                              Real& out) {
    PrecisionScope scope(ctx);
    const Real eps = ctx.series_epsilon();
    Real mu = 4 * nu * nu;
    Real P = 1, Q = 0;
    Real ak = 1;
    bool converged = false;
    Real prev = 1;
    for (long k = 1; k < 4000; ++k) {
        ak *= (mu - Real((2 * k - 1) * (2 * k - 1))) / (Real(k) * 8 * x);
        Real t = ak;
        if (k % 4 == 1) Q += t;
        else if (k % 4 == 2) P -= t;
        else if (k % 4 == 3) Q -= t;
        else P += t;
        if (abs(t) < eps) { converged = true; break; }
        if (abs(t) > prev && k > 4) return false; // diverging before target
        prev = abs(t);
    }
    if (!converged) return false;
    Real w = x - nu * const_pi() / 2 - const_pi() / 4;
    out = sqrt(2 / (const_pi() * x)) * (cos(w) * P - sin(w) * Q);
    return true;
}

} // namespace detail

// J_nu(x) for nu > -1, x > 0. Ascending series for small/moderate x
// (internally elevated), asymptotic expansion once it can reach the target.
inline Complex bessel_j(const PrecisionContext& ctx, const Real& nu_in, const Real& x_in) {
    PrecisionScope scope(ctx);
    Real nu = snap(nu_in);
    Real x = snap(x_in);
    if (!(x > 0)) throw domain_error("bessel_j: need x > 0");
    if (!(nu > -1)) throw domain_error("bessel_j: need nu > -1");
    double xd = x.convert_to<double>();
    double nud = nu.convert_to<double>();
    double series_cutoff = std::max(20.0, nud);
    if (xd > series_cutoff) {
        Real out;
        if (detail::bessel_asymptotic(ctx, nu, x, out)) return Complex(out);
    }
    return Complex(detail::bessel_series(ctx, nu, x));
}

} // namespace heckeconv

#endif
