#ifndef HECKECONV_EXACT_HPP
#define HECKECONV_EXACT_HPP

#include "heckeconv/arith.hpp"
#include <map>

namespace heckeconv {

// Exact value of the form sum_j q_j pi^j with rational q_j. Everything the
// integer-parameter identities produce lives here: zeta at even integers is
// rational * pi^even, the trivial zeros/negative values are rational, the
// convolution weights are rational * pi.
class PiValue {
public:
    PiValue() = default;
    PiValue(const Rational& q) { add(0, q); }
    PiValue(long n) { add(0, Rational(n)); }
    static PiValue monomial(int pi_pow, const Rational& q) {
        PiValue v;
        v.add(pi_pow, q);
        return v;
    }

    bool is_zero() const { return terms_.empty(); }

    PiValue& operator+=(const PiValue& o) {
        for (auto& [p, q] : o.terms_) add(p, q);
        return *this;
    }
    PiValue& operator-=(const PiValue& o) {
        for (auto& [p, q] : o.terms_) add(p, -q);
        return *this;
    }
    PiValue operator-() const {
        PiValue r;
        for (auto& [p, q] : terms_) r.add(p, -q);
        return r;
    }
    PiValue operator*(const PiValue& o) const {
        PiValue r;
        for (auto& [p1, q1] : terms_)
            for (auto& [p2, q2] : o.terms_) r.add(p1 + p2, q1 * q2);
        return r;
    }
    PiValue operator*(const Rational& c) const {
        PiValue r;
        for (auto& [p, q] : terms_) r.add(p, q * c);
        return r;
    }
    PiValue operator/(const Rational& c) const {
        PiValue r;
        for (auto& [p, q] : terms_) r.add(p, q / c);
        return r;
    }
    // division by a monomial
    PiValue div_monomial(int pi_pow, const Rational& c) const {
        PiValue r;
        for (auto& [p, q] : terms_) r.add(p - pi_pow, q / c);
        return r;
    }
    friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
    friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
    bool operator==(const PiValue& o) const { return terms_ == o.terms_; }

    Real to_real(const PrecisionContext& ctx) const {
        PrecisionScope scope(ctx);
        Real pi = const_pi(), acc = 0;
        for (auto& [p, q] : terms_) {
            Real t = heckeconv::to_real(q);
            if (p > 0) t *= pow(pi, p);
            if (p < 0) t /= pow(pi, -p);
            acc += t;
        }
        return acc;
    }

    const std::map<int, Rational>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [p, q] : terms_) {
            if (!s.empty()) s += " + ";
            s += q.str();
            if (p != 0) s += " pi^" + std::to_string(p);
        }
        return s;
    }

private:
    void add(int p, const Rational& q) {
        if (q == 0) return;
        auto [it, fresh] = terms_.emplace(p, q);
        if (!fresh) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<int, Rational> terms_;
};

// zeta at integers, exact: even positives are rational pi-powers via
// Bernoulli numbers, nonpositive integers are rational, odd positives > 1
// are not representable here.
inline PiValue zeta_exact(long n) {
    if (n == 1) throw pole_error("zeta_exact: pole at 1");
    if (n > 1) {
        if (n % 2 != 0)
            throw domain_error("zeta_exact: odd zeta values are not pi-rational");
        // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)
        long m = n / 2;
        Rational b = bernoulli_rational(n);
        Rational coef = b / Rational(2 * factorial_int(n));
        Rational two_pow = 1;
        for (long i = 0; i < n; ++i) two_pow *= 2;
        coef *= two_pow;
        if (m % 2 == 0) coef = -coef;
        return PiValue::monomial(static_cast<int>(n), coef);
    }
    // zeta(0) = -1/2, zeta(-2m) = 0, zeta(1-2m) = -B_2m/(2m)
    if (n == 0) return PiValue(Rational(-1, 2));
    if ((-n) % 2 == 0) return PiValue();
    long m = (1 - n) / 2;
    return PiValue(-bernoulli_rational(2 * m) / Rational(2 * m));
}

// (2 pi)^k as a PiValue, k any integer
inline PiValue two_pi_pow(long k) {
    Rational two = 1;
    for (long i = 0; i < std::abs(k); ++i) two *= 2;
    if (k >= 0) return PiValue::monomial(static_cast<int>(k), two);
    return PiValue::monomial(static_cast<int>(k), Rational(1) / two);
}

inline Rational gamma_exact(long n) {
    if (n <= 0) throw pole_error("gamma_exact: pole at nonpositive integer");
    return Rational(factorial_int(n - 1));
}

} // namespace heckeconv

#endif
