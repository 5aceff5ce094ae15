#ifndef HECKECONV_COMPLEX_HPP
#define HECKECONV_COMPLEX_HPP

#include "heckeconv/context.hpp"

namespace heckeconv {

// Complex scalar over the mpfr-backed Real. std::complex<Real> is not
// guaranteed to behave for non-builtin types, and the identity machinery
// needs explicit control over branches anyway, so we carry our own.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(long r) : re(r), im(0) {}
    Complex(int r) : re(r), im(0) {}
    explicit Complex(const Rational& q) : re(to_real(q)), im(0) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator+(Complex a, const Real& b) { a.re += b; return a; }
inline Complex operator+(const Real& b, Complex a) { a.re += b; return a; }
inline Complex operator-(Complex a, const Real& b) { a.re -= b; return a; }
inline Complex operator-(const Real& b, const Complex& a) { return Complex(b) - a; }
inline Complex operator*(Complex a, long s) { return a *= Real(s); }
inline Complex operator*(long s, Complex a) { return a *= Real(s); }
inline Complex operator/(Complex a, long s) { return a /= Real(s); }
inline Complex operator+(Complex a, long b) { a.re += b; return a; }
inline Complex operator-(Complex a, long b) { a.re -= b; return a; }
inline Complex operator+(long b, Complex a) { a.re += b; return a; }
inline Complex operator-(long b, const Complex& a) { return Complex(Real(b)) - a; }
inline Complex operator/(const Real& s, const Complex& a) { return Complex(s) / a; }
inline Complex operator/(long s, const Complex& a) { return Complex(Real(s)) / a; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Complex snap(const Complex& z) { return {snap(z.re), snap(z.im)}; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) {
    if (z.im.is_zero()) return abs(z.re);
    if (z.re.is_zero()) return abs(z.im);
    return hypot(z.re, z.im);
}
// principal argument in (-pi, pi]
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real e = exp(z.re);
    if (z.im.is_zero()) return {e, Real(0)};
    return {e * cos(z.im), e * sin(z.im)};
}

// principal branch: log|z| + i arg z, arg in (-pi, pi]
inline Complex log(const Complex& z) {
    if (z.is_zero()) throw domain_error("log: zero argument");
    if (z.im.is_zero() && z.re > 0) return {log(z.re), Real(0)};
    return {log(abs(z)), arg(z)};
}

inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero() && z.re >= 0) return {sqrt(z.re), Real(0)};
    Real r = abs(z);
    Real u = sqrt((r + abs(z.re)) / 2);
    Real v = abs(z.im) / (2 * u);
    if (z.re >= 0) return {u, z.im >= 0 ? v : -v};
    return {v, z.im >= 0 ? u : -u};
}

// principal power z^w = exp(w log z); integer exponents stay exact-path
inline Complex pow(const Complex& z, long n) {
    if (n == 0) return Complex(1);
    if (z.is_zero()) {
        if (n > 0) return Complex(0);
        throw domain_error("pow: 0 to negative power");
    }
    unsigned long m = n > 0 ? (unsigned long)n : (unsigned long)(-(n + 1)) + 1;
    Complex base = z, acc(1);
    while (m) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    if (n < 0) return Complex(1) / acc;
    return acc;
}

inline Complex pow(const Complex& z, const Complex& w) {
    if (w.is_zero()) return Complex(1);
    if (z.is_zero()) {
        if (w.is_real() && w.re > 0) return Complex(0);
        throw domain_error("pow: zero base");
    }
    if (w.is_real() && w.re == floor(w.re) && abs(w.re) < Real(1e9)) {
        return pow(z, w.re.convert_to<long>());
    }
    return exp(w * log(z));
}

// x^w for x > 0 real: exp(w log x), no branch question
inline Complex pow_positive(const Real& x, const Complex& w) {
    if (x <= 0) throw domain_error("pow_positive: base must be positive");
    if (w.is_real()) return Complex(pow(x, w.re));
    return exp(w * log(x));
}

inline Complex sin(const Complex& z) {
    if (z.im.is_zero()) return {sin(z.re), Real(0)};
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}
inline Complex cos(const Complex& z) {
    if (z.im.is_zero()) return {cos(z.re), Real(0)};
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

// true if z is a real number indistinguishable from an integer at the
// current precision (tolerance 2^-(prec/2), so deliberate offsets >= 1e-8
// at 50 digits are never misread as integers)
inline bool near_integer(const Complex& z, long& n_out) {
    if (!z.im.is_zero()) return false;
    Real r = round(z.re);
    if (abs(r) > Real(1e15)) return false;
    Real tol = ldexp(Real(1), -static_cast<long>(Real::default_precision() * 1.66));
    if (abs(z.re - r) <= tol) {
        n_out = r.convert_to<long>();
        return true;
    }
    return false;
}
inline bool is_nonpositive_integer(const Complex& z, long& n_out) {
    return near_integer(z, n_out) && n_out <= 0;
}

inline Real const_pi() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// sin(pi z), cos(pi z) with exact zeros/units at (half-)integer real z
inline Complex sin_pi(const Complex& z) {
    long n;
    if (near_integer(z, n)) return Complex(0);
    if (near_integer(Complex(z.re * 2, z.im), n)) {
        // half-integer: sin(pi(m + 1/2)) = (-1)^m
        long m = (n - 1) / 2;
        return Complex(((m % 2 + 2) % 2 == 0) ? 1 : -1);
    }
    return sin(Complex(const_pi()) * z);
}
inline Complex cos_pi(const Complex& z) {
    long n;
    if (near_integer(z, n)) return Complex(((n % 2 + 2) % 2 == 0) ? 1 : -1);
    if (near_integer(Complex(z.re * 2, z.im), n)) return Complex(0);
    return cos(Complex(const_pi()) * z);
}

// i^k for even integer k, computed as (-1)^(k/2)
inline Real i_pow_even(long k) {
    if (k % 2 != 0) throw domain_error("i_pow_even: k must be even");
    long h = k / 2;
    return Real(((h % 2 + 2) % 2 == 0) ? 1 : -1);
}

inline std::string to_string(const Complex& z, unsigned digits = 20) {
    return "(" + z.re.str(digits) + ", " + z.im.str(digits) + ")";
}

// boundary values of an analytic function across the cut [1, oo)
struct CutPair {
    Complex above; // limit from the upper half-plane, F(x + i0)
    Complex below; // limit from the lower half-plane, F(x - i0)

    Complex half_sum() const { return (above + below) / Real(2); }
    Complex jump() const { return above - below; }
};

} // namespace heckeconv

#endif
