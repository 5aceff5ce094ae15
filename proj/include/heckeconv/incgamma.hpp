#ifndef HECKECONV_INCGAMMA_HPP
#define HECKECONV_INCGAMMA_HPP

#include "heckeconv/gamma.hpp"

namespace heckeconv {

namespace detail {

// modified Lentz continued fraction for Gamma(s,x), x >= |s|+1:
// Gamma(s,x) = e^-x x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)))
inline Complex upper_gamma_cf(const PrecisionContext& ctx, const Complex& s, const Real& x) {
    const Real tiny = ldexp(Real(1), -100000);
    const Real eps = ctx.series_epsilon();
    Complex b = Complex(x) + Complex(1) - s;
    Complex c = Complex(1) / Complex(tiny);
    Complex d = Complex(1) / b;
    Complex h = d;
    for (unsigned long i = 1; i < ctx.max_series_terms(); ++i) {
        Complex an = -Real(i) * (Complex(Real(i)) - s);
        b += Complex(2);
        d = an * d + b;
        if (abs(d) < tiny) d = Complex(tiny);
        c = b + an / c;
        if (abs(c) < tiny) c = Complex(tiny);
        d = Complex(1) / d;
        Complex delta = d * c;
        h *= delta;
        if (abs(delta - Complex(1)) < eps) {
            return exp(-x) * pow_positive(x, s) * h;
        }
    }
    throw precision_error("upper_incomplete_gamma: continued fraction stalled");
}

// lower-gamma series: gamma(s,x) = x^s e^-x sum_{n>=0} x^n / (s(s+1)...(s+n))
inline Complex lower_gamma_series(const PrecisionContext& ctx, const Complex& s, const Real& x) {
    const Real eps = ctx.series_epsilon();
    Complex term = Complex(1) / s;
    Complex acc = term;
    for (unsigned long n = 1; n < ctx.max_series_terms(); ++n) {
        term *= x / (s + Real(n));
        acc += term;
        if (abs(term) < eps * abs(acc))
            return pow_positive(x, s) * exp(-x) * acc;
    }
    throw precision_error("upper_incomplete_gamma: series stalled");
}

} // namespace detail

// Gamma(s, x) for complex s, real x > 0. Continued fraction when
// x >= |s|+1, otherwise series + recursion; Re s <= 0 lifted by
// Gamma(s,x) = (Gamma(s+1,x) - x^s e^-x)/s.
inline Complex upper_incomplete_gamma(const PrecisionContext& ctx, const Complex& s_in,
                                      const Real& x_in) {
    PrecisionScope scope(ctx);
    Complex s = snap(s_in);
    Real x = snap(x_in);
    if (!(x > 0)) throw domain_error("upper_incomplete_gamma: need x > 0");
    if (x >= abs(s) + 1) return detail::upper_gamma_cf(ctx, s, x);
    if (s.re <= Real(0.25)) {
        long lift = static_cast<long>((Real(0.25) - s.re).convert_to<double>()) + 1;
        // climb to Re s > 0.25, then unwind
        Complex g = upper_incomplete_gamma(ctx, s + Real(lift), x);
        for (long i = lift - 1; i >= 0; --i) {
            Complex si = s + Real(i);
            g = (g - pow_positive(x, si) * exp(-x)) / si;
        }
        return g;
    }
    long n;
    if (is_nonpositive_integer(s, n)) throw domain_error("unreachable: Re s > 0");
    Complex whole = gamma(ctx, s);
    Complex lower = detail::lower_gamma_series(ctx, s, x);
    Complex g = whole - lower;
    // if the subtraction cancelled most digits, recompute with head-room
    Real scale = std::max(abs(whole), abs(lower));
    if (!g.is_zero() && scale / abs(g) > pow(Real(10), static_cast<int>(ctx.guard_digits) / 2)) {
        double lost = std::max(0.0, log10(scale / abs(g)).convert_to<double>());
        PrecisionContext boosted = ctx.with_digits(ctx.digits() + static_cast<unsigned>(lost) + 10);
        Complex gb;
        {
            PrecisionScope s2(boosted);
            gb = gamma(boosted, snap(s)) - detail::lower_gamma_series(boosted, snap(s), snap(x));
        }
        g = Complex(Real(gb.re), Real(gb.im));
    }
    return g;
}

} // namespace heckeconv

#endif
