#ifndef HECKECONV_JACOBI_HPP
#define HECKECONV_JACOBI_HPP

#include "heckeconv/complex.hpp"
#include "heckeconv/rational.hpp"

namespace heckeconv {

// P_n^(alpha,beta)(z) as the finite sum
//   (1/n!) sum_m C(n,m) (alpha+beta+n+1)_m (alpha+m+1)_{n-m} ((z-1)/2)^m,
// which is the Gamma-quotient definition with the quotients written as
// Pochhammers, so negative integer parameters stay finite.
inline Complex jacobi_p(const PrecisionContext& ctx, long n, const Complex& alpha_,
                        const Complex& beta_, const Complex& z_) {
    PrecisionScope scope(ctx);
    if (n < 0) throw domain_error("jacobi_p: need n >= 0");
    Complex alpha = snap(alpha_), beta = snap(beta_), z = snap(z_);
    Complex w = (z - Complex(1)) / Real(2);
    Complex acc(0);
    for (long m = 0; m <= n; ++m) {
        Complex t(to_real(binomial_int(n, m)));
        for (long j = 0; j < m; ++j) t *= (alpha + beta + Real(n + 1 + j));
        for (long j = 0; j < n - m; ++j) t *= (alpha + Real(m + 1 + j));
        acc += t * pow(w, m);
    }
    return acc / to_real(factorial_int(n));
}

// exact path for rational parameters
inline Rational jacobi_p_exact(long n, const Rational& alpha, const Rational& beta,
                               const Rational& z) {
    if (n < 0) throw domain_error("jacobi_p_exact: need n >= 0");
    Rational w = (z - 1) / 2;
    Rational acc = 0;
    Rational wpow = 1;
    for (long m = 0; m <= n; ++m) {
        Rational t(binomial_int(n, m));
        t *= pochhammer_rat(alpha + beta + n + 1, m);
        t *= pochhammer_rat(alpha + m + 1, n - m);
        acc += t * wpow;
        wpow *= w;
    }
    return acc / Rational(factorial_int(n));
}

} // namespace heckeconv

#endif
