#ifndef HECKECONV_EXACT_IDENTITY_HPP
#define HECKECONV_EXACT_IDENTITY_HPP

#include "heckeconv/identity.hpp"

namespace heckeconv {

// Exact-rational path for odd integer r1, r2 and positive integer d. The
// weight collapses to a polynomial times pi:
//   Q(n1,n2) = -(-1)^(k/2) sin(pi r2/2) 2 pi (n2/n1)^r2 (n1/n)^(d+r1+r2)
//              2F1(-d, -d-r1; r2+1; 1-n/n1) / (G(r2+1)G(d+1)G(d+r1+1)),
// supported on 0 < n1 < n (the cosine factors vanish at odd integers).
namespace exact_path {

struct Params {
    long r1, r2, d, k;
};

inline Params make(const IdentityParams& p) {
    if (!p.integer_triple())
        throw regime_error("exact path: parameters must be exact integers");
    Params q;
    q.r1 = numerator(p.r1x->re).convert_to<long>();
    q.r2 = numerator(p.r2x->re).convert_to<long>();
    q.d = numerator(p.dx->re).convert_to<long>();
    q.k = p.k;
    if (q.r1 < 1 || q.r2 < 1 || q.r1 % 2 == 0 || q.r2 % 2 == 0 || q.d < 1)
        throw regime_error("exact path: need odd positive r1, r2 and positive integer d");
    return q;
}

// 2F1(-d, -d-r1; r2+1; z) as an exact polynomial value
inline Rational hyp_poly(const Params& p, const Rational& z) {
    Rational term = 1, acc = 1;
    for (long m = 0; m < p.d; ++m) {
        term *= Rational(-p.d + m) * Rational(-p.d - p.r1 + m) /
                (Rational(p.r2 + 1 + m) * Rational(m + 1));
        term *= z;
        acc += term;
    }
    return acc;
}

inline PiValue weight_q_exact(const Params& p, long n1, long n) {
    if (n1 <= 0 || n1 >= n) return PiValue();  // odd-index support is (0, n)
    long n2 = n - n1;
    Rational z = Rational(-n2, n1);  // 1 - n/n1
    Rational poly = hyp_poly(p, z);
    Rational ratio = 1;
    for (long i = 0; i < p.r2; ++i) ratio *= Rational(n2, n1);
    for (long i = 0; i < p.d + p.r1 + p.r2; ++i) ratio *= Rational(n1, n);
    Rational denom = Rational(factorial_int(p.r2)) * Rational(factorial_int(p.d)) *
                     Rational(factorial_int(p.d + p.r1));
    Rational coef = Rational(2) * ratio * poly / denom;
    // -(-1)^(k/2) sin(pi r2 / 2)
    long sgn = ((p.k / 2) % 2 == 0) ? -1 : 1;
    if (((p.r2 - 1) / 2) % 2 == 1) sgn = -sgn;
    return PiValue::monomial(1, coef * sgn);
}

// Z^(alpha,beta)_d(n) for integer parameters, as an exact pi-polynomial
inline PiValue z_term_exact(long alpha, long beta, long d, long n) {
    PiValue first = zeta_exact(1 - beta) * two_pi_pow(beta) /
                    (gamma_exact(alpha + beta + d + 1) * gamma_exact(d + beta + 1));
    Rational npow = 1;
    for (long i = 0; i < beta; ++i) npow /= n;
    PiValue second = zeta_exact(1 + beta) * two_pi_pow(-beta) * npow /
                     (gamma_exact(d + 1) * gamma_exact(d + alpha + 1));
    return first + second;
}

struct Report {
    PiValue lhs, rhs, residual;
    bool exactly_zero = false;
};

// exact two-sided verification; requires dim S_k = 0 so the right side is
// pi-rational (k in {6, 8, 10, 14})
inline Report verify_exact(const IdentityParams& ip, long n) {
    Params p = make(ip);
    if (cusp_dim(p.k) != 0)
        throw regime_error("exact verification needs dim S_k = 0 (k in {6,8,10,14})");
    Report rep;
    for (long n1 = 1; n1 < n; ++n1) {
        PiValue q = weight_q_exact(p, n1, n);
        if (q.is_zero()) continue;
        rep.lhs += q * (sigma_exact(-p.r1, n1) * sigma_exact(-p.r2, n - n1));
    }
    long ik = ((p.k / 2) % 2 == 0) ? 1 : -1;
    rep.rhs = z_term_exact(p.r1, p.r2, p.d, n) * (sigma_exact(-p.r1, n) * Rational(-ik)) +
              z_term_exact(p.r2, p.r1, p.d, n) * (sigma_exact(-p.r2, n) * Rational(-1));
    rep.residual = rep.lhs - rep.rhs;
    rep.exactly_zero = rep.residual.is_zero();
    return rep;
}

} // namespace exact_path

} // namespace heckeconv

#endif
