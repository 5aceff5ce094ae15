#ifndef HECKECONV_RATIONAL_HPP
#define HECKECONV_RATIONAL_HPP

#include "heckeconv/context.hpp"
#include <vector>

namespace heckeconv {

inline Int factorial_int(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// binomial with rational (possibly negative) upper index
inline Rational binomial_rat(const Rational& a, long k) {
    if (k < 0) return 0;
    Rational b = 1;
    for (long i = 0; i < k; ++i) b *= (a - i) / Rational(i + 1);
    return b;
}

inline Rational pochhammer_rat(const Rational& a, long m) {
    Rational p = 1;
    for (long i = 0; i < m; ++i) p *= (a + i);
    return p;
}

// Exact Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2), grown on demand.
// Sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
inline const std::vector<Rational>& bernoulli_table(std::size_t upto) {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    while (table.size() <= upto) {
        long m = static_cast<long>(table.size());
        if (m % 2 == 1 && m > 1) {
            table.emplace_back(0);
            continue;
        }
        Rational s = 0;
        for (long j = 0; j < m; ++j)
            s += Rational(binomial_int(m + 1, j)) * table[j];
        table.emplace_back(-s / Rational(m + 1));
    }
    return table;
}

inline Rational bernoulli_rational(long n) {
    if (n < 0) throw domain_error("bernoulli of negative index");
    return bernoulli_table(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

inline long gcd_long(long a, long b) {
    a = std::abs(a); b = std::abs(b);
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

// modular inverse of h mod l (l >= 1); errors if gcd(h, l) != 1
inline long mod_inverse(long h, long l) {
    if (l < 1) throw domain_error("mod_inverse: modulus must be positive");
    if (l == 1) return 0;
    long r0 = l, r1 = ((h % l) + l) % l, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        long t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw domain_error("mod_inverse: arguments not coprime");
    return ((t0 % l) + l) % l;
}

} // namespace heckeconv

#endif
