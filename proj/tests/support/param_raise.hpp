#ifndef HECKECONV_TEST_PARAM_RAISE_HPP
#define HECKECONV_TEST_PARAM_RAISE_HPP

// Exact symbolic engine for 2F1 with integer parameters, used as an
// independent oracle for the cut-pair evaluator. Elements live in
//   Q-span{ z^p, z^-i, (1-z)^-j }  +  (same span) * log(1-z),
// which is closed under theta = z d/dz, under multiplication by (1-z)^-1,
// and under the c-raising integral  c z^-c int_0^z t^(c-1) f(t) dt.
// Starting from 2F1(1,1;2;z) = -log(1-z)/z one reaches (a,b;c) by raising
// c first (integrations), then a and b via (theta+a)/a and (theta+b)/b.

#include "heckeconv/rational.hpp"
#include <map>
#include <cassert>

namespace hctest {

using heckeconv::Rational;
using heckeconv::Int;
using heckeconv::binomial_int;

// basis key: kind P -> z^idx (idx >= 0), N -> z^-idx (idx >= 1),
// M -> (1-z)^-idx (idx >= 1)
enum class BK { P, N, M };
using Key = std::pair<BK, long>;
using Span = std::map<Key, Rational>;

inline void add_to(Span& s, const Key& k, const Rational& v) {
    if (v == 0) return;
    auto [it, fresh] = s.emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) s.erase(it);
    }
}

struct LogElem {
    Span a;  // no-log part
    Span b;  // coefficient of log(1-z)

    LogElem operator+(const LogElem& o) const {
        LogElem r = *this;
        for (auto& [k, v] : o.a) add_to(r.a, k, v);
        for (auto& [k, v] : o.b) add_to(r.b, k, v);
        return r;
    }
    LogElem scaled(const Rational& c) const {
        LogElem r;
        for (auto& [k, v] : a) add_to(r.a, k, v * c);
        for (auto& [k, v] : b) add_to(r.b, k, v * c);
        return r;
    }
};

// theta acting on a pure span (no log)
inline Span theta_span(const Span& s) {
    Span r;
    for (auto& [k, v] : s) {
        auto [kind, idx] = k;
        switch (kind) {
        case BK::P: add_to(r, {BK::P, idx}, v * idx); break;
        case BK::N: add_to(r, {BK::N, idx}, -v * idx); break;
        case BK::M:
            // theta (1-z)^-j = j[(1-z)^-(j+1) - (1-z)^-j]
            add_to(r, {BK::M, idx + 1}, v * idx);
            add_to(r, {BK::M, idx}, -v * idx);
            break;
        }
    }
    return r;
}

// multiply a span by (1-z)^-1 (partial fractions keep us in the basis)
inline Span mul_inv_omz(const Span& s) {
    Span r;
    for (auto& [k, v] : s) {
        auto [kind, idx] = k;
        switch (kind) {
        case BK::P:
            // z^p/(1-z) = (1-z)^-1 - (1 + z + ... + z^(p-1))
            add_to(r, {BK::M, 1}, v);
            for (long u = 0; u < idx; ++u) add_to(r, {BK::P, u}, -v);
            break;
        case BK::N:
            // 1/(z^i (1-z)) = sum_{u=1..i} z^-u + (1-z)^-1
            for (long u = 1; u <= idx; ++u) add_to(r, {BK::N, u}, v);
            add_to(r, {BK::M, 1}, v);
            break;
        case BK::M:
            add_to(r, {BK::M, idx + 1}, v);
            break;
        }
    }
    return r;
}

inline LogElem theta(const LogElem& f) {
    LogElem r;
    r.a = theta_span(f.a);
    r.b = theta_span(f.b);
    // theta(log(1-z)) = -z/(1-z) = 1 - (1-z)^-1; product rule adds b * that
    for (auto& [k, v] : f.b) add_to(r.a, k, v);
    Span corr = mul_inv_omz(f.b);
    for (auto& [k, v] : corr) add_to(r.a, k, -v);
    return r;
}

// definite integral int_0^z t^(c-1) * span dt; pure spans only.
// log(1-z) pieces produced by (1-t)^-1 go into *logpart.
inline Span integrate_tc(const Span& s, long c, Span* logpart) {
    Span r;
    for (auto& [k, v] : s) {
        auto [kind, idx] = k;
        if (kind == BK::P) {
            add_to(r, {BK::P, c + idx}, v / Rational(c + idx));
        } else if (kind == BK::N) {
            long e = c - 1 - idx;  // t^e
            assert(e != -1 && "log z escaped the basis");
            if (e + 1 > 0) add_to(r, {BK::P, e + 1}, v / Rational(e + 1));
            else add_to(r, {BK::N, -(e + 1)}, v / Rational(e + 1));
        } else {
            // t^(c-1) (1-t)^-j, expand t^(c-1) = sum_u C(c-1,u)(-1)^u (1-t)^u
            for (long u = 0; u <= c - 1; ++u) {
                Rational coef = v * Rational(binomial_int(c - 1, u));
                if (u % 2 == 1) coef = -coef;
                long e = u - idx;  // (1-t)^e
                if (e == -1) {
                    // int (1-t)^-1 = -log(1-z)
                    add_to(*logpart, {BK::P, 0}, -coef);
                } else {
                    // [-(1-t)^(e+1)/(e+1)]_0^z
                    Rational q = -coef / Rational(e + 1);
                    if (e + 1 >= 0) {
                        // expand (1-z)^(e+1) into powers of z
                        for (long u2 = 0; u2 <= e + 1; ++u2) {
                            Rational c2 = q * Rational(binomial_int(e + 1, u2));
                            if (u2 % 2 == 1) c2 = -c2;
                            add_to(r, {BK::P, u2}, c2);
                        }
                    } else {
                        add_to(r, {BK::M, -(e + 1)}, q);
                    }
                    add_to(r, {BK::P, 0}, -q);  // minus value at t = 0
                }
            }
        }
    }
    return r;
}

// multiply span by z^-c, staying in the basis
inline Span mul_zpow(const Span& s, long c) {
    Span r = s;
    for (long step = 0; step < c; ++step) {
        Span nxt;
        for (auto& [k, v] : r) {
            auto [kind, idx] = k;
            switch (kind) {
            case BK::P:
                if (idx >= 1) add_to(nxt, {BK::P, idx - 1}, v);
                else add_to(nxt, {BK::N, 1}, v);
                break;
            case BK::N: add_to(nxt, {BK::N, idx + 1}, v); break;
            case BK::M:
                // (1-z)^-j / z = 1/z * partial fractions
                // 1/(z(1-z)^j) = 1/z + sum_{u=1..j} (1-z)^-u
                if (idx >= 1) {
                    add_to(nxt, {BK::N, 1}, v);
                    for (long u = 1; u <= idx; ++u) add_to(nxt, {BK::M, u}, v);
                }
                break;
            }
        }
        r.swap(nxt);
    }
    return r;
}

// g = 2F1(a,b;c+1;z) from f = 2F1(a,b;c;z): g = c z^-c int_0^z t^(c-1) f dt
inline LogElem raise_c(const LogElem& f, long c) {
    Span log_from_a;
    Span ia = integrate_tc(f.a, c, &log_from_a);
    // integral of t^(c-1) * b * log(1-t): by parts with S = int t^(c-1) b
    Span dummy;
    Span S = integrate_tc(f.b, c, &dummy);
    assert(dummy.empty() && "log part of S would leave the space");
    // result_log-part gains S; remaining integral int S/(1-t) dt
    Span rest = mul_inv_omz(S);
    Span log_from_rest;
    Span irest = integrate_tc(rest, 1, &log_from_rest);  // plain integral: t^0 * rest
    LogElem g;
    g.a = ia;
    for (auto& [k, v] : irest) add_to(g.a, k, v);
    g.b = S;
    for (auto& [k, v] : log_from_a) add_to(g.b, k, v);
    for (auto& [k, v] : log_from_rest) add_to(g.b, k, v);
    // scale by c and shift by z^-c
    g.a = mul_zpow(g.a, c);
    g.b = mul_zpow(g.b, c);
    return g.scaled(Rational(c));
}

// (theta + p)/p raises parameter p (works for a or b)
inline LogElem raise_param(const LogElem& f, long p) {
    LogElem r = theta(f) + f.scaled(Rational(p));
    return r.scaled(Rational(1) / Rational(p));
}

inline Rational eval_span(const Span& s, const Rational& z) {
    Rational acc = 0;
    for (auto& [k, v] : s) {
        auto [kind, idx] = k;
        Rational t = v;
        if (kind == BK::P)
            for (long j = 0; j < idx; ++j) t *= z;
        else if (kind == BK::N)
            for (long j = 0; j < idx; ++j) t /= z;
        else
            for (long j = 0; j < idx; ++j) t /= (1 - z);
        acc += t;
    }
    return acc;
}

// build 2F1(a, b; c; z) symbolically from 2F1(1,1;2;z) = -log(1-z)/z
inline LogElem build_2f1(long a, long b, long c) {
    LogElem f;
    add_to(f.b, {BK::N, 1}, Rational(-1));
    for (long cc = 2; cc < c; ++cc) f = raise_c(f, cc);
    for (long aa = 1; aa < a; ++aa) f = raise_param(f, aa);
    for (long bb = 1; bb < b; ++bb) f = raise_param(f, bb);
    return f;
}

} // namespace hctest

#endif
