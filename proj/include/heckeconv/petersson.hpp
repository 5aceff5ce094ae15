#ifndef HECKECONV_PETERSSON_HPP
#define HECKECONV_PETERSSON_HPP

#include "heckeconv/bessel.hpp"
#include "heckeconv/eigenform.hpp"
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

namespace heckeconv {

namespace detail {

// double-precision J_(k-1)(x) for the small arguments of the far Kloosterman
// band: leading series terms suffice there
inline double bessel_j_small_double(long order, double x) {
    double term = 1.0;
    for (long i = 1; i <= order; ++i) term *= (x / 2) / i;
    double q = x * x / 4, acc = term;
    for (long m = 1; m < 30; ++m) {
        term *= -q / (m * (order + m));
        acc += term;
        if (std::fabs(term) < 1e-20 * std::fabs(acc)) break;
    }
    return acc;
}

// inverses of all units mod l via the multiplicative recursion
// inv[h] = inv[spf(h)] inv[h/spf(h)], primes by extended gcd
inline void unit_inverses(long l, const std::vector<long>& spf, std::vector<long>& inv,
                          long upto = 0) {
    if (upto == 0 || upto > l) upto = l;
    inv.assign(upto, 0);
    if (l == 1) return;
    if (upto > 1) inv[1] = 1;
    for (long h = 2; h < upto; ++h) {
        long p = spf[h];
        if (p == h) {  // prime
            if (l % p != 0) inv[h] = mod_inverse(h, l);
        } else {
            long other = h / p;
            if (inv[p] && inv[other])
                inv[h] = static_cast<long>((static_cast<unsigned long long>(inv[p]) * inv[other]) % l);
        }
    }
}

inline const std::vector<long>& spf_table(long upto) {
    static std::vector<long> spf;
    if (static_cast<long>(spf.size()) < upto + 1) {
        long n = upto + 1;
        spf.assign(n, 0);
        for (long i = 2; i < n; ++i) {
            if (spf[i] == 0)
                for (long j = i; j < n; j += i)
                    if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

// sum_{l <= L} (2 pi / l) S(-m,-m;l) J_{k-1}(4 pi m / l) in double precision
// over the band (l0, L]; terms there are <= 1e-28 so double is exact enough
inline double trace_band_double(long k, long m, long l0, long L) {
    const auto& spf = spf_table(L);
    std::vector<long> inv;
    const double pi_d = 3.14159265358979323846264338327950288;
    double acc = 0;
    std::vector<int> hist;
    for (long l = l0 + 1; l <= L; ++l) {
        // h <-> l-h gives t <-> -t, and cosine is even: fold everything
        // into t <= l/2 and double
        long half = l / 2 + 1;
        unit_inverses(l, spf, inv, half);
        hist.assign(half, 0);
        long mr = m % l;
        for (long h = 1; 2 * h < l; ++h) {
            if (!inv[h]) continue;
            long t = static_cast<long>((static_cast<unsigned long long>(mr) * ((h + inv[h]) % l)) % l);
            if (2 * t > l) t = l - t;
            hist[t] += 1;
        }
        double c1 = std::cos(2 * pi_d / l), s1 = std::sin(2 * pi_d / l);
        double cs = 1, sn = 0, S = 0;
        for (long t = 0; t < half; ++t) {
            if (hist[t]) S += hist[t] * cs;
            double cn = cs * c1 - sn * s1;
            sn = sn * c1 + cs * s1;
            cs = cn;
        }
        S *= 2;  // mirror units
        acc += (2 * pi_d / l) * S * bessel_j_small_double(k - 1, 4 * pi_d * m / l);
    }
    return acc;
}

} // namespace detail

// Petersson norm <f,f> for the dim-1 weights via the m = n bootstrap of the
// trace formula:
//   <f,f> = G(k-1) (4 pi m)^(1-k) a(m)^2 / (1 + (-1)^(k/2) S_sum(m)),
//   S_sum(m) = sum_l (2 pi / l) S(-m,-m;l) J_{k-1}(4 pi m / l).
// Bands: exact mpfr for small l, double for the mid band, envelope tail.
inline Real petersson_norm_bootstrap(const PrecisionContext& ctx, long k, long m) {
    PrecisionScope scope(ctx);
    if (cusp_dim(k) != 1)
        throw unsupported_weight_error("petersson_norm: need dim S_k = 1");
    if (m < 1) throw domain_error("petersson_norm: bootstrap index m >= 1");

    double kd = k, md = m;
    double log_gk = std::lgamma(kd);  // log G(k)
    // term bound 2 pi (2 pi m / l)^(k-1) / G(k): band edges from it
    auto band_edge = [&](double log_tol) {
        double l = 4 * 3.141592653589793 * md;  // J argument <= 1 from here
        while (std::log(2 * 3.141592653589793) + (kd - 1) * std::log(2 * 3.141592653589793 * md / l)
                   - log_gk > log_tol) l *= 1.05;
        return static_cast<long>(l) + 2;
    };
    // tail beyond L1 is bounded by bound(L1) L1/(k-2); one digit of slack.
    // The l-sum work grows like L1^2, so L1 is capped: at k = 12 the cap
    // corresponds to ~47 correct digits, far beyond any identity use here.
    long L0 = band_edge(-std::log(10.0) * 30);
    long L1 = band_edge(-std::log(10.0) * (static_cast<double>(ctx.digits()) - 1.0));
    const long l1_cap = 60000;
    if (L1 > l1_cap) L1 = l1_cap;
    if (L0 > L1) L0 = L1;

    Complex acc(0);
    Real four_pi_m = 4 * const_pi() * Real(m);
    for (long l = 1; l <= L0; ++l) {
        Complex S = kloosterman(ctx, -m, -m, l);
        Real J = bessel_j(ctx, Real(k - 1), four_pi_m / Real(l)).re;
        acc += S * (2 * const_pi() / Real(l) * J);
    }
    double band = detail::trace_band_double(k, m, L0, L1);
    Real ssum = acc.re + Real(band);

    EigenformTable f = eigenform_coeffs(k, m);
    Real am = to_real(f.a(m));
    Real gk1 = to_real(factorial_int(k - 2));
    Real norm = gk1 * pow_positive(four_pi_m, Complex(Real(1 - k))).re * am * am /
                (1 + i_pow_even(k) * ssum);
    if (!(norm > 0))
        throw precision_error("petersson_norm: non-positive result, kernel inconsistency");
    return norm;
}

// memoized default-bootstrap norm (pure in (k, digits)), with an optional
// plain-text disk cache next to the coefficient tables
inline Real petersson_norm(const PrecisionContext& ctx, long k, const std::string& cache_dir = "") {
    static std::map<std::pair<long, unsigned>, Real> cache;
    auto key = std::make_pair(k, ctx.digits());
    auto it = cache.find(key);
    if (it != cache.end()) {
        PrecisionScope scope(ctx);
        return snap(it->second);
    }
    std::string path;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        path = cache_dir + "/petersson_k" + std::to_string(k) + "_d" +
               std::to_string(ctx.digits()) + ".txt";
        std::ifstream in(path);
        std::string num;
        if (in >> num) {
            PrecisionScope scope(ctx);
            Real v(num);
            cache.emplace(key, v);
            return v;
        }
    }
    Real v = petersson_norm_bootstrap(ctx, k, 1);
    cache.emplace(key, v);
    if (!path.empty()) {
        std::ofstream out(path);
        PrecisionScope scope(ctx);
        out << v.str(ctx.working_digits() + 5) << "\n";
    }
    return v;
}

} // namespace heckeconv

#endif
