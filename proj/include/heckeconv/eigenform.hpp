#ifndef HECKECONV_EIGENFORM_HPP
#define HECKECONV_EIGENFORM_HPP

#include "heckeconv/arith.hpp"
#include <filesystem>
#include <fstream>
#include <vector>

namespace heckeconv {

// dim S_k for the full modular group, even k >= 4
inline long cusp_dim(long k) {
    if (k < 4 || k % 2 != 0) throw unsupported_weight_error("cusp_dim: need even k >= 4");
    long d = k / 12;
    if (k % 12 == 2) d -= 1;
    return d;
}

struct EigenformTable {
    long k = 0;                 // weight
    std::vector<Int> coeffs;    // a(1), a(2), ..., a(N); empty when dim S_k = 0

    long size() const { return static_cast<long>(coeffs.size()); }
    const Int& a(long n) const {
        if (n < 1 || n > size()) throw insufficient_table_error(
            "EigenformTable: coefficient index out of range", n);
        return coeffs[static_cast<std::size_t>(n - 1)];
    }
};

namespace detail {

// Delta = q prod (1-q^n)^24: repeated sparse multiplication by the
// pentagonal-number series sum_j (-1)^j q^(j(3j-1)/2)
inline std::vector<Int> delta_q_expansion_pentagonal(long N) {
    std::vector<std::pair<long, int>> pent;
    for (long j = -((long)std::sqrt((double)N) + 2); ; ++j) {
        long e = j * (3 * j - 1) / 2;
        if (j > 0 && e > N) break;
        if (e >= 0 && e <= N) pent.push_back({e, (j % 2 == 0) ? 1 : -1});
        if (j > 10 * N) break;
    }
    std::sort(pent.begin(), pent.end());
    std::vector<Int> cur(static_cast<std::size_t>(N) + 1);
    cur[0] = 1;
    std::vector<Int> nxt(static_cast<std::size_t>(N) + 1);
    for (int pass = 0; pass < 24; ++pass) {
        for (auto& v : nxt) v = 0;
        for (long i = 0; i <= N; ++i) {
            if (cur[i].is_zero()) continue;
            for (auto [e, s] : pent) {
                if (i + e > N) break;
                if (s > 0) nxt[i + e] += cur[i];
                else nxt[i + e] -= cur[i];
            }
        }
        cur.swap(nxt);
    }
    // tau(n) = [q^(n-1)] prod^24
    std::vector<Int> a(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) a[n - 1] = cur[n - 1];
    return a;
}

// same expansion through (eta^3)^8 = (sum_j (-1)^j (2j+1) q^(j(j+1)/2))^8;
// three times fewer passes, used for long tables
inline std::vector<Int> delta_q_expansion_eta3(long N) {
    std::vector<std::pair<long, long>> sparse;
    for (long j = 0;; ++j) {
        long e = j * (j + 1) / 2;
        if (e > N) break;
        sparse.push_back({e, (j % 2 == 0) ? (2 * j + 1) : -(2 * j + 1)});
    }
    std::vector<Int> cur(static_cast<std::size_t>(N) + 1);
    cur[0] = 1;
    std::vector<Int> nxt(static_cast<std::size_t>(N) + 1);
    for (int pass = 0; pass < 8; ++pass) {
        for (auto& v : nxt) v = 0;
        for (long i = 0; i <= N; ++i) {
            if (cur[i].is_zero()) continue;
            for (auto [e, s] : sparse) {
                if (i + e > N) break;
                nxt[i + e] += cur[i] * s;
            }
        }
        cur.swap(nxt);
    }
    std::vector<Int> a(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) a[n - 1] = cur[n - 1];
    return a;
}

// multiply a q-series (coeffs c[0..N]) by E4 or E6 in place
inline std::vector<Int> multiply_eisenstein(const std::vector<Int>& c, long N, int which) {
    // E4 = 1 + 240 sum sigma_3(n) q^n ; E6 = 1 - 504 sum sigma_5(n) q^n
    std::vector<Int> e(static_cast<std::size_t>(N) + 1);
    e[0] = 1;
    for (long n = 1; n <= N; ++n) {
        Rational s = sigma_exact(which == 4 ? 3 : 5, n);
        Int si = numerator(s); // integer for nonnegative index
        e[n] = (which == 4) ? si * 240 : si * -504;
    }
    std::vector<Int> out(static_cast<std::size_t>(N) + 1);
    for (long i = 0; i <= N; ++i) {
        if (c[i].is_zero()) continue;
        for (long j = 0; i + j <= N; ++j) {
            if (e[j].is_zero()) continue;
            out[i + j] += c[i] * e[j];
        }
    }
    return out;
}

} // namespace detail

// exact integer Fourier coefficients a(1..N) of the normalized eigenform of
// weight k, for the one-dimensional spaces k in {12,16,18,20,22,26};
// weights with dim S_k = 0 return an empty table, dim >= 2 is rejected
inline EigenformTable eigenform_coeffs(long k, long N) {
    long dim = cusp_dim(k);
    EigenformTable t;
    t.k = k;
    if (dim == 0) return t;
    if (dim > 1)
        throw unsupported_weight_error(
            "eigenform_coeffs: dim S_k >= 2 (k = " + std::to_string(k) +
            ") needs Hecke diagonalization over a number field; unsupported");
    if (N < 1) throw domain_error("eigenform_coeffs: need N >= 1");

    std::vector<Int> delta = (N > 10000) ? detail::delta_q_expansion_eta3(N)
                                         : detail::delta_q_expansion_pentagonal(N);
    if (k == 12) {
        t.coeffs = std::move(delta);
        return t;
    }
    // shift down to the q-series c with a(n) = c[n-1], multiply, shift back
    std::vector<Int> c(static_cast<std::size_t>(N) + 1);
    for (long n = 1; n <= N; ++n) c[n - 1] = delta[n - 1];
    int n4 = 0, n6 = 0;
    switch (k) {
    case 16: n4 = 1; break;
    case 18: n6 = 1; break;
    case 20: n4 = 2; break;
    case 22: n4 = 1; n6 = 1; break;
    case 26: n4 = 2; n6 = 1; break;
    default:
        throw unsupported_weight_error("eigenform_coeffs: unexpected weight");
    }
    for (int i = 0; i < n4; ++i) c = detail::multiply_eisenstein(c, N - 1, 4);
    for (int i = 0; i < n6; ++i) c = detail::multiply_eisenstein(c, N - 1, 6);
    t.coeffs.resize(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) t.coeffs[n - 1] = c[n - 1];
    return t;
}

// plain-text cache: header "k N", then one coefficient per line
inline void save_eigenform_table(const EigenformTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_eigenform_table: cannot open " + path);
    out << t.k << " " << t.size() << "\n";
    for (const auto& c : t.coeffs) out << c << "\n";
}

inline EigenformTable load_eigenform_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_eigenform_table: cannot open " + path);
    EigenformTable t;
    long n = 0;
    in >> t.k >> n;
    t.coeffs.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        std::string s;
        in >> s;
        t.coeffs[static_cast<std::size_t>(i)] = Int(s);
    }
    if (!in) throw std::runtime_error("load_eigenform_table: truncated file " + path);
    return t;
}

// cache-aware accessor; grows the cached table when a longer one is needed
inline EigenformTable eigenform_coeffs_cached(long k, long N, const std::string& cache_dir) {
    if (cache_dir.empty()) return eigenform_coeffs(k, N);
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    std::string path = cache_dir + "/eigenform_k" + std::to_string(k) + ".txt";
    if (fs::exists(path)) {
        EigenformTable t = load_eigenform_table(path);
        if (t.k == k && t.size() >= N) {
            t.coeffs.resize(static_cast<std::size_t>(N));
            return t;
        }
    }
    EigenformTable t = eigenform_coeffs(k, N);
    save_eigenform_table(t, path);
    return t;
}

} // namespace heckeconv

#endif
