#ifndef HECKECONV_HYP2F1_HPP
#define HECKECONV_HYP2F1_HPP

#include "heckeconv/gamma.hpp"

namespace heckeconv {

struct cut_contact_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Gauss series sum (a)_m (b)_m / ((c)_m m!) z^m, |z| < 1
inline Complex gauss_series(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                            const Complex& c, const Complex& z) {
    const Real eps = ctx.series_epsilon();
    Complex term(1), acc(1);
    for (unsigned long m = 0; m < ctx.max_series_terms(); ++m) {
        term *= (a + Real(m)) * (b + Real(m)) / ((c + Real(m)) * Real(m + 1)) * z;
        acc += term;
        if (abs(term) < eps * (abs(acc) + Real(1))) return acc;
    }
    throw precision_error("hyp2f1: Gauss series did not converge");
}

// terminating series when a = -na is a nonpositive integer
inline Complex hyp_polynomial(const PrecisionContext& ctx, long na, const Complex& a,
                              const Complex& b, const Complex& c, const Complex& z) {
    Complex term(1), acc(1);
    for (long m = 0; m < -na; ++m) {
        term *= (a + Real(m)) * (b + Real(m)) / ((c + Real(m)) * Real(m + 1)) * z;
        acc += term;
    }
    return acc;
}

// inner evaluations for connection formulas: argument is off the cut and
// either small or on the negative real side, so series/Pfaff always lands
inline Complex hyp_inner(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                         const Complex& c, const Complex& z) {
    long na, nb;
    if (is_nonpositive_integer(a, na)) return hyp_polynomial(ctx, na, a, b, c, z);
    if (is_nonpositive_integer(b, nb)) return hyp_polynomial(ctx, nb, b, a, c, z);
    if (abs(z) <= Real(0.75)) return gauss_series(ctx, a, b, c, z);
    Complex w = z / (z - Complex(1));
    if (abs(w) < Real(0.999))
        return pow(Complex(1) - z, -a) * gauss_series(ctx, a, c - b, c, w);
    throw precision_error("hyp2f1: inner argument out of reach");
}

// 15.8.4: connection at 1-z, c-a-b not an integer.
// lw = chosen branch of log(1-z); off the cut it is the principal value,
// on the cut it is log(x-1) -+ i pi for the side  x +- i0.
inline Complex one_minus_z_generic(const PrecisionContext& ctx, const Complex& a,
                                   const Complex& b, const Complex& c, const Complex& w,
                                   const Complex& lw) {
    Complex cab = c - a - b;
    Complex f1 = hyp_inner(ctx, a, b, a + b - c + Real(1), w);
    Complex f2 = hyp_inner(ctx, c - a, c - b, cab + Real(1), w);
    Complex p1 = gamma(ctx, c) * gamma(ctx, cab) *
                 reciprocal_gamma(ctx, c - a) * reciprocal_gamma(ctx, c - b);
    Complex p2 = gamma(ctx, c) * gamma(ctx, -cab) *
                 reciprocal_gamma(ctx, a) * reciprocal_gamma(ctx, b);
    return p1 * f1 + exp(cab * lw) * p2 * f2;
}

// 15.8.10: connection at 1-z for c-a-b = mm >= 0 integer.
// F = A sum_{s<mm} (a)_s(b)_s/(s!(1-mm)_s) w^s
//     - B (-w)^mm sum_s (a+mm)_s(b+mm)_s/(s!(s+mm)!) w^s
//       * [lw - psi(s+1) - psi(s+mm+1) + psi(a+s+mm) + psi(b+s+mm)]
// where (-w)^mm = (z-1)^mm is single-valued.
inline Complex one_minus_z_log(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                               const Complex& c, long mm, const Complex& w, const Complex& lw) {
    if (mm < 0) {
        // Euler transform raises c-a-b to -mm > 0; (1-z)^(c-a-b) = w^mm exact
        return pow(w, mm) * one_minus_z_log(ctx, c - a, c - b, c, -mm, w, lw);
    }
    const Real eps = ctx.series_epsilon();
    Complex acc(0);
    if (mm > 0) {
        Complex pref = gamma(ctx, Complex(mm)) * gamma(ctx, c) *
                       reciprocal_gamma(ctx, a + Real(mm)) * reciprocal_gamma(ctx, b + Real(mm));
        Complex term(1);
        Complex sum1(1);
        for (long s = 0; s + 1 < mm; ++s) {
            term *= (a + Real(s)) * (b + Real(s)) / (Real(s + 1) * Real(1 - mm + s)) * w;
            sum1 += term;
        }
        acc = pref * sum1;
    }
    Complex B = gamma(ctx, c) * reciprocal_gamma(ctx, a) * reciprocal_gamma(ctx, b);
    // running psi values
    Complex psi_s1 = digamma(ctx, Complex(1));
    Complex psi_sm1 = digamma(ctx, Complex(mm + 1));
    Complex psi_asm = digamma(ctx, a + Real(mm));
    Complex psi_bsm = digamma(ctx, b + Real(mm));
    Complex coef = Complex(1) / to_real(factorial_int(mm)); // s = 0 value of (..)_s/(s!(s+mm)!)
    Complex sum2(0);
    for (unsigned long s = 0; s < ctx.max_series_terms(); ++s) {
        Complex bracket = lw - psi_s1 - psi_sm1 + psi_asm + psi_bsm;
        Complex term = coef * bracket;
        sum2 += term;
        if (abs(term) < eps * (abs(sum2) + Real(1)) && s > 2) break;
        Real sr(static_cast<long>(s));
        coef *= (a + Real(mm) + sr) * (b + Real(mm) + sr) * w /
                ((sr + 1) * (sr + Real(mm) + 1));
        psi_s1 += Complex(1) / (sr + 1);
        psi_sm1 += Complex(1) / (sr + Real(mm) + 1);
        psi_asm += Complex(1) / (a + Real(mm) + sr);
        psi_bsm += Complex(1) / (b + Real(mm) + sr);
        if (s + 1 == ctx.max_series_terms())
            throw precision_error("hyp2f1: log series (1-z) did not converge");
    }
    return acc - B * pow(-w, mm) * sum2;
}

// 15.8.2: connection at 1/z, b-a not an integer.
// lmz = chosen branch of log(-z): principal off the cut, log(x) -+ i pi on it.
inline Complex inv_z_generic(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                             const Complex& c, const Complex& u, const Complex& lmz) {
    Complex f1 = hyp_inner(ctx, a, a - c + Real(1), a - b + Real(1), u);
    Complex f2 = hyp_inner(ctx, b, b - c + Real(1), b - a + Real(1), u);
    Complex p1 = gamma(ctx, c) * gamma(ctx, b - a) *
                 reciprocal_gamma(ctx, b) * reciprocal_gamma(ctx, c - a);
    Complex p2 = gamma(ctx, c) * gamma(ctx, a - b) *
                 reciprocal_gamma(ctx, a) * reciprocal_gamma(ctx, c - b);
    return exp(-a * lmz) * p1 * f1 + exp(-b * lmz) * p2 * f2;
}

// A&S 15.3.14-type connection at 1/z for b - a = mm >= 0 integer:
// F = G(mm)G(c)/(G(b)G(c-a)) (-z)^-a sum_{s<mm} (a)_s(a-c+1)_s/(s!(1-mm)_s) z^-s
//   + G(c)/G(a) (-z)^-b sum_s (b)_s/(s!(s+mm)!) z^-s
//       * { [lmz + psi(s+1) + psi(s+mm+1) - psi(b+s)] / G(c-b-s)  -  d/dx(1/G)(c-b-s) }
// the last piece written as -psi(x)/G(x) at x = c-b-s, finite everywhere.
inline Complex inv_z_log(const PrecisionContext& ctx, const Complex& a_, const Complex& b_,
                         const Complex& c, long mm, const Complex& u, const Complex& lmz) {
    Complex a = a_, b = b_;
    if (mm < 0) { std::swap(a, b); mm = -mm; }
    const Real eps = ctx.series_epsilon();
    Complex acc(0);
    if (mm > 0) {
        Complex pref = gamma(ctx, Complex(mm)) * gamma(ctx, c) *
                       reciprocal_gamma(ctx, b) * reciprocal_gamma(ctx, c - a);
        Complex term(1), sum1(1);
        for (long s = 0; s + 1 < mm; ++s) {
            term *= (a + Real(s)) * (a - c + Real(1 + s)) / (Real(s + 1) * Real(1 - mm + s)) * u;
            sum1 += term;
        }
        acc = exp(-a * lmz) * pref * sum1;
    }
    Complex B = gamma(ctx, c) * reciprocal_gamma(ctx, a);
    Complex psi_s1 = digamma(ctx, Complex(1));
    Complex psi_sm1 = digamma(ctx, Complex(mm + 1));
    Complex psi_bs = digamma(ctx, b);
    // coef_s = (-1)^s (b)_s / (s!(s+mm)!) u^s
    Complex coef = Complex(1) / to_real(factorial_int(mm));
    Complex sum2(0);
    for (unsigned long s = 0; s < ctx.max_series_terms(); ++s) {
        Complex x = c - b - Real(static_cast<long>(s));
        long nx;
        Complex term;
        if (is_nonpositive_integer(x, nx)) {
            // 1/Gamma vanishes; -psi(x)/Gamma(x) -> (-1)^j j! at x = -j
            long j = -nx;
            Real val = to_real(factorial_int(j));
            if (j % 2 != 0) val = -val;
            term = coef * val;
        } else {
            Complex bracket = lmz + psi_s1 + psi_sm1 - psi_bs - digamma(ctx, x);
            term = coef * bracket * reciprocal_gamma(ctx, x);
        }
        sum2 += term;
        if (abs(term) < eps * (abs(sum2) + Real(1)) && s > 2) break;
        Real sr(static_cast<long>(s));
        coef *= (b + sr) * (-u) / ((sr + 1) * (sr + Real(mm) + 1));
        psi_s1 += Complex(1) / (sr + 1);
        psi_sm1 += Complex(1) / (sr + Real(mm) + 1);
        psi_bs += Complex(1) / (b + sr);
        if (s + 1 == ctx.max_series_terms())
            throw precision_error("hyp2f1: log series (1/z) did not converge");
    }
    Real sgn_m = (mm % 2 == 0) ? Real(1) : Real(-1);
    return acc + sgn_m * B * exp(-b * lmz) * sum2;
}

struct Hyp2F1Router {
    const PrecisionContext& ctx;
    Complex a, b, c;
    bool cab_int = false, ba_int = false;
    long m_cab = 0, m_ba = 0;

    Hyp2F1Router(const PrecisionContext& ctx_, const Complex& a_, const Complex& b_,
                 const Complex& c_)
        : ctx(ctx_), a(a_), b(b_), c(c_) {
        long nc;
        if (is_nonpositive_integer(c, nc))
            throw domain_error("hyp2f1: c is a nonpositive integer");
        cab_int = near_integer(c - a - b, m_cab);
        ba_int = near_integer(b - a, m_ba);
    }

    bool polynomial(long& n_out) const {
        long na, nb;
        if (is_nonpositive_integer(a, na)) { n_out = na; return true; }
        if (is_nonpositive_integer(b, nb)) { n_out = nb; return true; }
        return false;
    }

    // off-cut evaluation, principal branch
    Complex eval(const Complex& z) const {
        long np;
        if (polynomial(np)) {
            long na;
            if (is_nonpositive_integer(a, na)) return hyp_polynomial(ctx, na, a, b, c, z);
            is_nonpositive_integer(b, na);
            return hyp_polynomial(ctx, na, b, a, c, z);
        }
        if (z.is_zero()) return Complex(1);
        if (abs(z) <= Real(0.7)) return gauss_series(ctx, a, b, c, z);
        Complex w = z / (z - Complex(1));
        if (abs(w) <= Real(0.7))
            return pow(Complex(1) - z, -a) * gauss_series(ctx, a, c - b, c, w);
        Complex omz = Complex(1) - z;
        if (abs(omz) <= Real(0.9)) {
            Complex lw = log(omz);
            return cab_int ? one_minus_z_log(ctx, a, b, c, m_cab, omz, lw)
                           : one_minus_z_generic(ctx, a, b, c, omz, lw);
        }
        if (abs(z) >= Real(1.1)) {
            Complex u = Complex(1) / z;
            Complex lmz = log(-z);
            return ba_int ? inv_z_log(ctx, a, b, c, m_ba, u, lmz)
                          : inv_z_generic(ctx, a, b, c, u, lmz);
        }
        // remaining ring: fall back to the better of series/Pfaff
        if (abs(z) < 1 || abs(w) < 1) {
            if (abs(z) <= abs(w)) return gauss_series(ctx, a, b, c, z);
            return pow(Complex(1) - z, -a) * gauss_series(ctx, a, c - b, c, w);
        }
        throw precision_error("hyp2f1: argument in unreachable region");
    }

    // boundary values on the cut, x > 1; side = +1 for x+i0, -1 for x-i0
    Complex eval_cut_side(const Real& x, int side) const {
        long np;
        if (polynomial(np)) return eval(Complex(x));
        Complex omz(Real(1) - x, Real(0)); // negative real
        Complex lw(log(x - 1), side > 0 ? -const_pi() : const_pi());
        if (!cab_int) return one_minus_z_generic(ctx, a, b, c, omz, lw);
        if (x < Real(1.6)) return one_minus_z_log(ctx, a, b, c, m_cab, omz, lw);
        Complex u(Real(1) / x, Real(0));
        Complex lmz(log(x), side > 0 ? -const_pi() : const_pi());
        if (ba_int) return inv_z_log(ctx, a, b, c, m_ba, u, lmz);
        return inv_z_generic(ctx, a, b, c, u, lmz);
    }
};

} // namespace detail

// principal-branch 2F1(a, b; c; z) for z off the cut [1, oo)
inline Complex hyp2f1(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                      const Complex& c, const Complex& z) {
    PrecisionScope scope(ctx);
    detail::Hyp2F1Router r(ctx, snap(a), snap(b), snap(c));
    Complex zz = snap(z);
    long np;
    if (zz.is_real() && zz.re >= 1 && !r.polynomial(np))
        throw cut_contact_error("hyp2f1: z on the cut [1, oo); use hyp2f1_cut_pair");
    return r.eval(zz);
}

// boundary values (F(x+i0), F(x-i0)) across the cut, x >= 1
inline CutPair hyp2f1_cut_pair(const PrecisionContext& ctx, const Complex& a, const Complex& b,
                               const Complex& c, const Real& x_in) {
    PrecisionScope scope(ctx);
    Real x = snap(x_in);
    if (!(x >= 1)) throw domain_error("hyp2f1_cut_pair: need x >= 1");
    detail::Hyp2F1Router r(ctx, snap(a), snap(b), snap(c));
    long np;
    if (r.polynomial(np)) {
        Complex v = r.eval(Complex(x));
        return {v, v};
    }
    if (x == 1) {
        // F(1) = G(c)G(c-a-b) / (G(c-a)G(c-b)) when Re(c-a-b) > 0
        Complex cab = r.c - r.a - r.b;
        if (!(cab.re > 0))
            throw cut_contact_error("hyp2f1_cut_pair: divergent at x = 1 for Re(c-a-b) <= 0");
        Complex v = gamma(ctx, r.c) * gamma(ctx, cab) * reciprocal_gamma(ctx, r.c - r.a) *
                    reciprocal_gamma(ctx, r.c - r.b);
        return {v, v};
    }
    return {r.eval_cut_side(x, +1), r.eval_cut_side(x, -1)};
}

} // namespace heckeconv

#endif
