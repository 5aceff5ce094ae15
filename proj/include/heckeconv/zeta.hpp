#ifndef HECKECONV_ZETA_HPP
#define HECKECONV_ZETA_HPP

#include "heckeconv/gamma.hpp"

namespace heckeconv {

namespace detail {

// Euler-Maclaurin for zeta(s, a) = sum_{n>=0} (n+a)^-s, any complex s != 1:
//   sum_{n<M} (n+a)^-s + (M+a)^(1-s)/(s-1) + (M+a)^-s / 2
//   + sum_{j>=1} B_2j/(2j)! (s)_{2j-1} (M+a)^(-s-2j+1)
// M grows with precision and |Im s| so the correction tail converges.
inline Complex hurwitz_em(const PrecisionContext& ctx, const Complex& s, const Real& a,
                          long m_boost) {
    const Real eps = ctx.series_epsilon();
    long bits = static_cast<long>(Real::default_precision() * 3.33);
    long M = 12 + static_cast<long>(0.27 * bits) +
             static_cast<long>(0.4 * abs(s.im).convert_to<double>()) + m_boost;

    Complex acc(0);
    for (long n_ = 0; n_ < M; ++n_)
        acc += pow_positive(a + Real(n_), -s);

    Real Ma = a + Real(M);
    Complex Mas = pow_positive(Ma, -s); // (M+a)^-s
    acc += Mas * Ma / (s - Complex(1)); // (M+a)^(1-s)/(s-1)
    acc += Mas / Real(2);

    // correction terms: B_2j/(2j)! * (s)_{2j-1} * (M+a)^(-s-2j+1)
    Complex poch = s;             // (s)_1
    Complex mpow = Mas / Ma;      // (M+a)^(-s-2j+1) at j = 1
    Int fact = 2;                 // (2j)!
    Real prev = 0;
    for (long j = 1; j < 600; ++j) {
        Complex term = to_real(bernoulli_rational(2 * j)) / to_real(fact) * poch * mpow;
        acc += term;
        Real t = abs(term);
        if (t < eps * (abs(acc) + Real(1))) return acc;
        if (j > 3 && t > prev) {
            // divergence before target: retry with larger M
            return hurwitz_em(ctx, s, a, m_boost + M);
        }
        prev = t;
        poch *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
        mpow /= Ma * Ma;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    throw precision_error("hurwitz_em: no convergence");
}

} // namespace detail

// Hurwitz zeta(s, a) for 0 < a <= 1 (standard sum over (n+a)^-s), s != 1.
inline Complex hurwitz_zeta(const PrecisionContext& ctx, const Complex& s_in, const Real& a_in) {
    PrecisionScope scope(ctx);
    Complex s = snap(s_in);
    Real a = snap(a_in);
    if (!(a > 0) || a > 1) throw domain_error("hurwitz_zeta: need 0 < a <= 1");
    long one;
    if (near_integer(s, one) && one == 1)
        throw pole_error("hurwitz_zeta: pole at s = 1", "1");
    return detail::hurwitz_em(ctx, s, a, 0);
}

inline Complex riemann_zeta(const PrecisionContext& ctx, const Complex& s_in) {
    PrecisionScope scope(ctx);
    Complex s = snap(s_in);
    long one;
    if (near_integer(s, one) && one == 1)
        throw pole_error("riemann_zeta: pole at s = 1", "1");
    return detail::hurwitz_em(ctx, s, Real(1), 0);
}

// zeta'(s) by central differencing with step 10^(-digits/3) at tripled
// working precision; truncation error ~ h^2 |zeta'''|.
inline Complex zeta_derivative(const PrecisionContext& ctx, const Complex& s) {
    PrecisionContext ctx3 = ctx.with_digits(3 * ctx.digits());
    Complex d;
    {
        PrecisionScope scope(ctx3);
        Complex s3 = snap(s);
        Real h = pow(Real(10), -static_cast<int>(ctx.digits() / 3));
        Complex sp(s3.re + h, s3.im), sm(s3.re - h, s3.im);
        d = (detail::hurwitz_em(ctx3, sp, Real(1), 0) -
             detail::hurwitz_em(ctx3, sm, Real(1), 0)) / (2 * h);
    }
    PrecisionScope scope(ctx);
    return {Real(d.re), Real(d.im)}; // round back to working precision
}

} // namespace heckeconv

#endif
