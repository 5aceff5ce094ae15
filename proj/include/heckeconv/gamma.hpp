#ifndef HECKECONV_GAMMA_HPP
#define HECKECONV_GAMMA_HPP

#include "heckeconv/complex.hpp"
#include "heckeconv/rational.hpp"

namespace heckeconv {

namespace detail {

// Bernoulli numbers as Reals at the current default precision.
inline Real bernoulli_real(long n) {
    return to_real(bernoulli_rational(n));
}

// Stirling series for log Gamma, valid once Re(w) is large enough for the
// current precision. Series: (w-1/2) log w - w + log(2pi)/2
//   + sum_j B_2j / (2j(2j-1) w^(2j-1)).
inline Complex log_gamma_stirling(const Complex& w) {
    Complex lg = (w - Real(0.5)) * log(w) - w + Real(0.5) * log(2 * const_pi());
    Complex w2 = Complex(1) / (w * w);
    Complex wpow = Complex(1) / w; // w^(1-2j), starts at j=1
    Real eps = ldexp(Real(1), -static_cast<long>(Real::default_precision() * 3.33) - 8);
    Real prev = 0;
    for (long j = 1; j < 400; ++j) {
        Complex term = bernoulli_real(2 * j) / Real(2 * j * (2 * j - 1)) * wpow;
        lg += term;
        Real t = abs(term);
        if (t < eps * abs(lg)) return lg;
        if (j > 4 && t > prev) break; // asymptotic series started diverging
        prev = t;
        wpow *= w2;
    }
    throw precision_error("log_gamma_stirling: series did not reach target");
}

inline double shift_threshold() {
    // Re(w) beyond which the Stirling tail reaches ~current precision
    return 0.27 * Real::default_precision() * 3.33 + 10.0;
}

} // namespace detail

// Gamma(z), principal values, any z except nonpositive integers.
// Reflection for Re z < 1/2, recurrence shift + Stirling otherwise.
inline Complex gamma(const PrecisionContext& ctx, const Complex& z_in) {
    PrecisionScope scope(ctx);
    Complex z = snap(z_in);
    long n;
    if (is_nonpositive_integer(z, n)) {
        // residue at z = -m is (-1)^m / m!
        long m = -n;
        Rational res = Rational(((m % 2) == 0) ? 1 : -1) / Rational(factorial_int(m));
        throw pole_error("gamma: pole at nonpositive integer " + std::to_string(n),
                         to_real(res).str(20));
    }
    if (z.re < Real(0.5)) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = sin_pi(z);
        return Complex(const_pi()) / (s * gamma(ctx, Complex(1) - z));
    }
    if (z.is_real() && z.re == floor(z.re) && z.re < Real(10000)) {
        return Complex(to_real(factorial_int(z.re.convert_to<long>() - 1)));
    }
    double T = detail::shift_threshold();
    long shift = 0;
    if (z.re < Real(T)) shift = static_cast<long>(T - z.re.convert_to<double>()) + 1;
    Complex w = z + Real(shift);
    Complex lg = detail::log_gamma_stirling(w);
    Complex g = exp(lg);
    for (long i = shift - 1; i >= 0; --i) g /= (z + Real(i));
    return g;
}

// 1/Gamma(z); entire, zero at nonpositive integers.
inline Complex reciprocal_gamma(const PrecisionContext& ctx, const Complex& z_in) {
    PrecisionScope scope(ctx);
    Complex z = snap(z_in);
    long n;
    if (is_nonpositive_integer(z, n)) return Complex(0);
    return Complex(1) / gamma(ctx, z);
}

// digamma psi(z); reflection for Re z < 1/2, shift + Stirling otherwise.
// psi(w) ~ log w - 1/(2w) - sum_j B_2j / (2j w^(2j))
inline Complex digamma(const PrecisionContext& ctx, const Complex& z_in) {
    PrecisionScope scope(ctx);
    Complex z = snap(z_in);
    long n;
    if (is_nonpositive_integer(z, n))
        throw pole_error("digamma: pole at nonpositive integer " + std::to_string(n));
    if (z.re < Real(0.5)) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Complex cot = cos_pi(z) / sin_pi(z);
        return digamma(ctx, Complex(1) - z) - Complex(const_pi()) * cot;
    }
    double T = detail::shift_threshold();
    long shift = 0;
    if (z.re < Real(T)) shift = static_cast<long>(T - z.re.convert_to<double>()) + 1;
    Complex w = z + Real(shift);
    Complex ps = log(w) - Complex(1) / (2 * w);
    Complex w2 = Complex(1) / (w * w);
    Complex wpow = w2;
    Real eps = ctx.series_epsilon();
    Real prev = 0;
    bool ok = false;
    for (long j = 1; j < 400; ++j) {
        Complex term = detail::bernoulli_real(2 * j) / Real(2 * j) * wpow;
        ps -= term;
        Real t = abs(term);
        if (t < eps * abs(ps)) { ok = true; break; }
        if (j > 4 && t > prev) break;
        prev = t;
        wpow *= w2;
    }
    if (!ok) throw precision_error("digamma: series did not reach target");
    for (long i = shift - 1; i >= 0; --i) ps -= Complex(1) / (z + Real(i));
    return ps;
}

} // namespace heckeconv

#endif
