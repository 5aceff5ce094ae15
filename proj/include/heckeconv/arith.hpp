#ifndef HECKECONV_ARITH_HPP
#define HECKECONV_ARITH_HPP

#include "heckeconv/zeta.hpp"
#include <numeric>
#include <optional>
#include <vector>

namespace heckeconv {

// index of a divisor sum; carries the exact rational alongside the numeric
// value whenever the caller has one
struct DivisorIndex {
    Complex a;
    std::optional<Rational> exact;

    DivisorIndex(const Complex& a_) : a(a_) {}
    DivisorIndex(const Rational& q) : a(Complex(to_real(q))), exact(q) {}
    DivisorIndex(long n) : a(Complex(n)), exact(Rational(n)) {}
};

namespace detail {

inline const std::vector<long>& small_primes() {
    static std::vector<long> primes = [] {
        std::vector<long> p;
        std::vector<bool> is_comp(100000, false);
        for (long i = 2; i < 100000; ++i) {
            if (!is_comp[i]) {
                p.push_back(i);
                for (long j = 2 * i; j < 100000; j += i) is_comp[j] = true;
            }
        }
        return p;
    }();
    return primes;
}

} // namespace detail

// prime factorization by trial division (prime cache, then odd steps)
inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n == 0) throw domain_error("factorize: zero");
    n = std::abs(n);
    std::vector<std::pair<long, int>> f;
    for (long p : detail::small_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) {
        long start = detail::small_primes().back() + 2;
        for (long d = start; d * d <= n; d += 2) {
            if (n % d == 0) {
                int e = 0;
                while (n % d == 0) { n /= d; ++e; }
                f.push_back({d, e});
            }
        }
        if (n > 1) f.push_back({n, 1});
    }
    return f;
}

inline std::vector<long> divisors_of(long n) {
    auto f = factorize(n);
    std::vector<long> divs{1};
    for (auto [p, e] : f) {
        std::size_t base = divs.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// sigma_a(x) = sum of d^a over positive divisors of |x|
inline Complex sigma(const PrecisionContext& ctx, const DivisorIndex& a, long x) {
    PrecisionScope scope(ctx);
    if (x == 0) throw domain_error("sigma: x = 0; use sigma_zero for the regularized value");
    Complex av = snap(a.a);
    Complex acc(0);
    for (long d : divisors_of(x)) acc += pow_positive(Real(d), av);
    return acc;
}

// exact divisor sum for integer index
inline Rational sigma_exact(long a, long x) {
    if (x == 0) throw domain_error("sigma_exact: x = 0");
    Rational acc = 0;
    for (long d : divisors_of(x)) {
        Rational dp = 1;
        for (long i = 0; i < std::abs(a); ++i) dp *= d;
        acc += (a >= 0) ? dp : Rational(1) / dp;
    }
    return acc;
}

// divisor-power sieve: sigma_index(m) for all m = 1..M in O(M log M)
inline std::vector<Complex> sigma_table(const PrecisionContext& ctx, const Complex& index,
                                        long M) {
    PrecisionScope scope(ctx);
    Complex idx = snap(index);
    std::vector<Complex> t(static_cast<std::size_t>(M) + 1, Complex(0));
    for (long dd = 1; dd <= M; ++dd) {
        Complex w = pow_positive(Real(dd), idx);
        for (long mult = dd; mult <= M; mult += dd) t[static_cast<std::size_t>(mult)] += w;
    }
    return t;
}

// sigma_{-r2}(0) := zeta(r2), the regularized value; requires Re r2 > 1
inline Complex sigma_zero(const PrecisionContext& ctx, const Complex& r2) {
    PrecisionScope scope(ctx);
    if (!(r2.re > 1)) throw domain_error("sigma_zero: need Re(r2) > 1");
    return riemann_zeta(ctx, r2);
}

inline long euler_phi(long n) {
    if (n < 1) throw domain_error("euler_phi: need n >= 1");
    long phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline int moebius(long n) {
    if (n < 1) throw domain_error("moebius: need n >= 1");
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return n == 1 ? 1 : mu;
}

// Ramanujan sum c_l(x) = sum over v coprime to l of e(vx/l); exact integer
// via the von Sterneck evaluation sum_{d | gcd(l,x)} mu(l/d) d
inline long ramanujan_c(long l, long x) {
    if (l < 1) throw domain_error("ramanujan_c: need l >= 1");
    long g = (x == 0) ? l : std::gcd(std::abs(x), l);
    long acc = 0;
    for (long d : divisors_of(g))
        if (l % d == 0) acc += moebius(l / d) * d;
    return acc;
}

namespace detail {

// counts of (m h + n hbar) mod l over units h; exact integers
inline std::vector<long> kloosterman_histogram(long m, long n, long l) {
    std::vector<long> hist(l, 0);
    long mr = ((m % l) + l) % l, nr = ((n % l) + l) % l;
    for (long h = 1; h <= l; ++h) {
        if (std::gcd(h, l) != 1) continue;
        long hbar = mod_inverse(h, l);
        long t = (mr * (h % l)) % l;
        t = (t + nr * hbar) % l;
        hist[t] += 1;
    }
    return hist;
}

} // namespace detail

// Kloosterman sum S(m,n;l) by direct enumeration with precomputed inverses;
// real to working precision (h <-> l-h pairing), returned with its residual
// imaginary part for the caller to inspect
inline Complex kloosterman(const PrecisionContext& ctx, long m, long n, long l) {
    PrecisionScope scope(ctx);
    if (l < 1) throw domain_error("kloosterman: need l >= 1");
    if (m == 0 || n == 0) throw domain_error("kloosterman: need m, n nonzero");
    if (l == 1) return Complex(1);
    auto hist = detail::kloosterman_histogram(m, n, l);
    // cos(2 pi t / l), sin(...) by Chebyshev-style recurrences
    Real theta = 2 * const_pi() / Real(l);
    Real c1 = cos(theta), s1 = sin(theta);
    Real cprev = 1, sprev = 0;
    Real sum_c = Real(hist[0]), sum_s = 0;
    for (long t = 1; t < l; ++t) {
        Real cnew = cprev * c1 - sprev * s1;
        Real snew = sprev * c1 + cprev * s1;
        cprev = cnew; sprev = snew;
        if (hist[t]) {
            sum_c += Real(hist[t]) * cnew;
            sum_s += Real(hist[t]) * snew;
        }
    }
    return {sum_c, sum_s};
}

} // namespace heckeconv

#endif
