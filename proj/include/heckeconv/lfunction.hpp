#ifndef HECKECONV_LFUNCTION_HPP
#define HECKECONV_LFUNCTION_HPP

#include "heckeconv/eigenform.hpp"
#include "heckeconv/incgamma.hpp"

namespace heckeconv {

namespace detail {

// terms of the completed-L series decay like n^((k+1)/2) e^(-2 pi n);
// smallest N with that bound below tol
inline long lambda_terms_needed(const PrecisionContext& ctx, long k, const Real& tol) {
    PrecisionScope scope(ctx);
    Real two_pi = 2 * const_pi();
    for (long n = 2;; ++n) {
        Real bound = pow(Real(n), Real(k + 1) / 2) * exp(-two_pi * Real(n));
        if (bound < tol) return n;
        if (n > 100000) throw precision_error("lambda_terms_needed: runaway");
    }
}

} // namespace detail

// completed L-function Lambda(s) = (2pi)^-s Gamma(s) L(s,f) via the two-sided
// incomplete-gamma expansion; entire in s, with the level-one functional
// equation Lambda(s) = (-1)^(k/2) Lambda(k-s) built in termwise:
//   Lambda(s) = sum_n a(n) [ (2pi n)^-s G(s, 2pi n)
//                            + (-1)^(k/2) (2pi n)^(s-k) G(k-s, 2pi n) ]
inline Complex completed_lambda(const PrecisionContext& ctx, const EigenformTable& f,
                                const Complex& s_in) {
    PrecisionScope scope(ctx);
    if (f.k < 4) throw unsupported_weight_error("completed_lambda: bad table");
    Complex s = snap(s_in);
    Real tol = pow(Real(10), -static_cast<int>(ctx.working_digits()) + 1);
    long need = detail::lambda_terms_needed(ctx, f.k, tol);
    if (f.size() < need)
        throw insufficient_table_error("completed_lambda: table too short", need);
    Real sign = i_pow_even(f.k);
    Real two_pi = 2 * const_pi();
    Complex acc(0);
    for (long n = 1; n <= need; ++n) {
        Real x = two_pi * Real(n);
        Complex t = pow_positive(x, -s) * upper_incomplete_gamma(ctx, s, x);
        Complex u = pow_positive(x, s - Real(f.k)) *
                    upper_incomplete_gamma(ctx, Complex(Real(f.k)) - s, x);
        acc += to_real(f.a(n)) * (t + sign * u);
    }
    return acc;
}

// L(s, f) for arbitrary complex s through the completed function
inline Complex l_value(const PrecisionContext& ctx, const EigenformTable& f, const Complex& s_in) {
    PrecisionScope scope(ctx);
    if (f.size() == 0) return Complex(0); // dim-0 table
    Complex s = snap(s_in);
    Complex lam = completed_lambda(ctx, f, s);
    return lam * pow_positive(2 * const_pi(), s) * reciprocal_gamma(ctx, s);
}

// sum_m a(m) sigma_{-r1}(m) m^(-d-r2-1) = L(d+r2+1,f) L(d+r1+r2+1,f) / zeta(r2+1)
inline Complex hecke_sigma_dirichlet(const PrecisionContext& ctx, const EigenformTable& f,
                                     const Complex& r1, const Complex& d, const Complex& r2) {
    PrecisionScope scope(ctx);
    if (f.size() == 0) return Complex(0);
    Complex s1 = snap(d) + snap(r2) + Real(1);
    Complex s2 = s1 + snap(r1);
    long one;
    if (near_integer(snap(r2) + Real(1), one) && one == 1)
        throw regime_error("hecke_sigma_dirichlet: zeta pole at r2 = 0");
    return l_value(ctx, f, s1) * l_value(ctx, f, s2) / riemann_zeta(ctx, snap(r2) + Real(1));
}

} // namespace heckeconv

#endif
