#ifndef HECKECONV_THMB_HPP
#define HECKECONV_THMB_HPP

#include "heckeconv/exact_identity.hpp"
#include "heckeconv/jacobi.hpp"

namespace heckeconv {

namespace detail {

inline exact_path::Params thmb_ints(const IdentityParams& p) {
    if (p.regime != Regime::theoremB)
        throw regime_error("theorem B operation outside the theorem B regime");
    exact_path::Params q;
    q.r1 = numerator(p.r1x->re).convert_to<long>();
    q.r2 = numerator(p.r2x->re).convert_to<long>();
    q.d = numerator(p.dx->re).convert_to<long>();
    q.k = p.k;
    return q;
}

inline long i_pow_sign(long exponent) {
    // i^exponent for even exponent
    if (exponent % 2 != 0) throw domain_error("i_pow_sign: odd exponent");
    return ((exponent / 2) % 2 == 0) ? 1 : -1;
}

} // namespace detail

// the regularized weight P(n1, n2), exact pi-rational:
// G(k-d-1) P = 2 pi i^(k+r2+1) (n2/n)^r2 P_{d+r1}^(r2,-r1)(2n1/n - 1) [0<n1<n]
//            + pi i^(r1+1) (n/n1)^(d+1) P_{-d-1}^(k-1,-r2)(1 - 2n/n1) sgn(n1)
inline PiValue thmB_weight_p_exact(const IdentityParams& p, long n1, long n) {
    auto q = detail::thmb_ints(p);
    if (n1 == 0 || n1 == n) throw domain_error("thmB_weight_p: n1 in {0, n}");
    long n2 = n - n1;
    Rational gkd1(factorial_int(q.k - q.d - 2));  // G(k-d-1)
    Rational acc = 0;
    if (n1 > 0 && n2 > 0) {
        Rational jac = jacobi_p_exact(q.d + q.r1, Rational(q.r2), Rational(-q.r1),
                                      Rational(2 * n1, n) - 1);
        Rational pw = 1;
        for (long i = 0; i < q.r2; ++i) pw *= Rational(n2, n);
        acc += Rational(2 * detail::i_pow_sign(q.k + q.r2 + 1)) * pw * jac;
    }
    {
        // n1 may be negative; build 2n/n1 by sign-safe division
        Rational jac = jacobi_p_exact(-q.d - 1, Rational(q.k - 1), Rational(-q.r2),
                                      Rational(1) - Rational(2 * n) / Rational(n1));
        // (n/n1)^(d+1) with d+1 <= -1
        Rational pw = 1;
        for (long i = 0; i < -(q.d + 1); ++i) pw *= Rational(n1, n);
        long sgn = (n1 > 0) ? 1 : -1;
        acc += Rational(detail::i_pow_sign(q.r1 + 1) * sgn) * pw * jac;
    }
    return PiValue::monomial(1, acc / gkd1);
}

inline Complex thmB_weight_p(const PrecisionContext& ctx, const IdentityParams& p, long n1,
                             long n) {
    PrecisionScope scope(ctx);
    return Complex(thmB_weight_p_exact(p, n1, n).to_real(ctx));
}

namespace detail {

// Zc^(ra,rb)_d(n) = (-1)^(d+1)(2pi)^rb zeta'(1-rb) / (G(1+d+rb)G(1+d+ra+rb)G(-d))
//                 + (2pi)^-rb zeta(1+rb) n^-rb / G(1+d+ra)
inline Complex thmb_z(const PrecisionContext& ctx, long ra, long rb, long d, long n) {
    Real two_pi = 2 * const_pi();
    Real sgn_d = ((d + 1) % 2 == 0) ? Real(1) : Real(-1);
    Complex zp = zeta_derivative(ctx, Complex(1 - rb));
    Complex first = Complex(sgn_d) * pow_positive(two_pi, Complex(rb)) * zp /
                    (to_real(gamma_exact(1 + d + rb)) *
                     to_real(gamma_exact(1 + d + ra + rb)) * to_real(gamma_exact(-d)));
    Complex second = Complex(zeta_exact(1 + rb).to_real(ctx)) *
                     pow_positive(two_pi, Complex(-rb)) * pow_positive(Real(n), Complex(-rb)) /
                     to_real(gamma_exact(1 + d + ra));
    return first + second;
}

} // namespace detail

inline Complex thmB_z_term(const PrecisionContext& ctx, const IdentityParams& p, long n) {
    PrecisionScope scope(ctx);
    auto q = detail::thmb_ints(p);
    return detail::thmb_z(ctx, q.r1, q.r2, q.d, n);
}

inline Complex thmB_z_term_swapped(const PrecisionContext& ctx, const IdentityParams& p, long n) {
    PrecisionScope scope(ctx);
    auto q = detail::thmb_ints(p);
    return detail::thmb_z(ctx, q.r2, q.r1, q.d, n);
}

// the regularized value of the divergent sum. The cusp line carries +i^k for
// the same reason as cusp_term: the limit of the corrected Theorem A.
inline Complex thmB_value(const PrecisionContext& ctx, const IdentityParams& p, long n,
                          const std::string& cache_dir = "") {
    PrecisionScope scope(ctx);
    auto q = detail::thmb_ints(p);
    long ik = detail::i_pow_sign(q.k);
    Complex acc = Complex(Real(-ik)) * thmB_z_term(ctx, p, n) *
                  Complex(to_real(sigma_exact(-q.r1, n)));
    acc -= thmB_z_term_swapped(ctx, p, n) * Complex(to_real(sigma_exact(-q.r2, n)));
    long dim = cusp_dim(q.k);
    if (dim > 1) throw unsupported_weight_error("thmB_value: dim S_k >= 2 unsupported");
    if (dim == 1) {
        long need = std::max<long>(n, detail::lambda_terms_needed(
                ctx, q.k, pow(Real(10), -static_cast<int>(ctx.working_digits()) + 1)));
        EigenformTable f = eigenform_coeffs_cached(q.k, need, cache_dir);
        Complex L1 = l_value(ctx, f, Complex(1 + q.d + q.r2));
        Complex L2 = l_value(ctx, f, Complex(1 + q.d + q.r1 + q.r2));
        Real norm = petersson_norm(ctx, q.k, cache_dir);
        Real pi = const_pi();
        Real two_pow = pow(Real(2), Real(2 - 2 * q.k - q.r2));
        Real pi_pow = pow(pi, Real(1 - q.k - q.r2));
        Complex cusp = Complex(Real(ik)) * two_pow * pi_pow *
                       to_real(factorial_int(q.k - 2)) / to_real(gamma_exact(1 + q.d + q.r1)) *
                       L1 * L2 * to_real(f.a(n)) / norm /
                       pow_positive(Real(n), Complex(q.d + q.r1 + q.r2));
        acc += cusp;
    }
    return acc;
}

// Section-4 limit probe: Gamma(dhat(eps)+1) Q^(r1+eps, r2+eps)_(d-eps)(n1, n2),
// which converges to P(n1, n2) as eps -> 0+
inline Complex weight_limit_check(const PrecisionContext& ctx, const IdentityParams& p, long n1,
                                  long n, const Real& eps_in) {
    PrecisionScope scope(ctx);
    Real eps = snap(eps_in);
    if (!(eps > 0) || eps > Real(0.25))
        throw domain_error("weight_limit_check: need 0 < eps <= 1/4 (eps = 0 degenerates)");
    auto q = detail::thmb_ints(p);
    Complex r1h = Complex(q.r1) + Real(eps), r2h = Complex(q.r2) + Real(eps);
    Complex dh = Complex(q.d) - Real(eps);
    detail::WeightEvaluator ev(ctx, r1h, r2h, dh, q.k);
    WeightValue w = ev.eval(n1, n);
    return gamma(ctx, dh + Real(1)) * w.q;
}

} // namespace heckeconv

#endif
