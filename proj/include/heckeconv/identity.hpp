#ifndef HECKECONV_IDENTITY_HPP
#define HECKECONV_IDENTITY_HPP

#include "heckeconv/hyp2f1.hpp"
#include "heckeconv/arith.hpp"
#include "heckeconv/exact.hpp"
#include "heckeconv/lfunction.hpp"
#include "heckeconv/petersson.hpp"
#include <chrono>
#include <optional>

namespace heckeconv {

enum class Regime { theoremA, theoremB };

struct ComplexRational {
    Rational re, im;
    bool is_real() const { return im == 0; }
};

// the parameter triple (r1, r2, d) with the derived even weight
// k = r1 + r2 + 2d + 2 and its regime tag
struct IdentityParams {
    Complex r1, r2, d;
    long k = 0;
    Regime regime = Regime::theoremA;
    // exact forms carried when the caller provided rationals
    std::optional<ComplexRational> r1x, r2x, dx;

    bool all_exact() const { return r1x && r2x && dx; }
    bool integer_triple() const {
        return all_exact() && r1x->is_real() && r2x->is_real() && dx->is_real() &&
               denominator(r1x->re) == 1 && denominator(r2x->re) == 1 && denominator(dx->re) == 1;
    }
};

namespace detail {

inline long derive_weight(const Complex& r1, const Complex& r2, const Complex& d) {
    Complex k = r1 + r2 + d * 2 + Real(2);
    long kk;
    if (!near_integer(k, kk))
        throw regime_error("identity: k = r1 + r2 + 2d + 2 must be an integer");
    if (kk % 2 != 0) throw regime_error("identity: k must be even");
    return kk;
}

} // namespace detail

inline IdentityParams make_theorem_a_params(const PrecisionContext& ctx, const Complex& r1,
                                            const Complex& r2, const Complex& d) {
    PrecisionScope scope(ctx);
    IdentityParams p;
    p.r1 = snap(r1); p.r2 = snap(r2); p.d = snap(d);
    p.k = detail::derive_weight(p.r1, p.r2, p.d);
    p.regime = Regime::theoremA;
    if (p.k < 6) throw regime_error("theorem A: need k >= 6");
    if (!(p.r1.re >= 0) || !(p.r2.re >= 0))
        throw regime_error("theorem A: need Re(r1), Re(r2) >= 0");
    if (!(p.d.re > 0)) throw regime_error("theorem A: need Re(d) > 0");
    if (p.r1.is_zero() && p.r2.is_zero())
        throw regime_error("theorem A: the case r1 = r2 = 0, d = 1 is excluded");
    return p;
}

inline IdentityParams make_theorem_a_params(const PrecisionContext& ctx,
                                            const ComplexRational& r1,
                                            const ComplexRational& r2,
                                            const ComplexRational& d) {
    PrecisionScope scope(ctx);
    auto cv = [](const ComplexRational& q) { return Complex(to_real(q.re), to_real(q.im)); };
    IdentityParams p = make_theorem_a_params(ctx, cv(r1), cv(r2), cv(d));
    p.r1x = r1; p.r2x = r2; p.dx = d;
    return p;
}

inline IdentityParams make_theorem_b_params(const PrecisionContext& ctx, long r1, long r2,
                                            long d) {
    PrecisionScope scope(ctx);
    if (r2 < 3 || r1 < r2 || r1 % 2 == 0 || r2 % 2 == 0)
        throw regime_error("theorem B: need odd integers r1 >= r2 >= 3");
    if (!(-r2 + 1 <= d && d <= -2))
        throw regime_error("theorem B: need -r2 + 1 <= d <= -2");
    if (d == -r1 - 1 || d == -r1 - r2 - 1)
        throw regime_error("theorem B: d hits an L-function pole");
    IdentityParams p;
    p.r1 = Complex(r1); p.r2 = Complex(r2); p.d = Complex(d);
    p.r1x = ComplexRational{Rational(r1), Rational(0)};
    p.r2x = ComplexRational{Rational(r2), Rational(0)};
    p.dx = ComplexRational{Rational(d), Rational(0)};
    p.k = 2 * d + 2 + r1 + r2;
    p.regime = Regime::theoremB;
    return p;
}

enum class BranchCase { n1_negative, n1_between_0_and_n, n1_above_n };

struct WeightValue {
    Complex q;
    Complex g_above, g_below;
    BranchCase branch_case = BranchCase::n1_between_0_and_n;
};

namespace detail {

// the weight at arbitrary (possibly perturbed) parameters; k is the exact
// even integer the caller guarantees equals r1 + r2 + 2d + 2
struct WeightEvaluator {
    const PrecisionContext& ctx;
    Complex r1, r2, d;
    long k;
    Complex a, b, c;
    Complex sin_r2, cos_r2, cos_r1;
    Real ik;        // i^k = (-1)^(k/2)
    Real gamma_k;   // (k-1)!

    WeightEvaluator(const PrecisionContext& ctx_, const Complex& r1_, const Complex& r2_,
                    const Complex& d_, long k_)
        : ctx(ctx_), r1(snap(r1_)), r2(snap(r2_)), d(snap(d_)), k(k_) {
        a = d + Real(1);
        b = d + r1 + Real(1);
        c = Complex(k);
        sin_r2 = sin_pi(r2 / Real(2));
        cos_r2 = cos_pi(r2 / Real(2));
        cos_r1 = cos_pi(r1 / Real(2));
        ik = i_pow_even(k);
        gamma_k = to_real(factorial_int(k - 1));
    }

    bool term_vanishes(long n1, long n) const {
        if (n1 < 0) return cos_r1.is_zero();
        if (n1 > n) return cos_r2.is_zero();
        return false;
    }

    WeightValue eval(long n1, long n) const {
        if (n1 == 0 || n1 == n) throw domain_error("weight_q: n1 in {0, n}");
        WeightValue w;
        Real x = Real(n) / Real(n1);
        if (n1 < 0) w.branch_case = BranchCase::n1_negative;
        else if (n1 > n) w.branch_case = BranchCase::n1_above_n;
        else w.branch_case = BranchCase::n1_between_0_and_n;

        if (w.branch_case == BranchCase::n1_between_0_and_n) {
            CutPair g = hyp2f1_cut_pair(ctx, a, b, c, x);
            w.g_above = g.above;
            w.g_below = g.below;
        } else {
            Complex g = hyp2f1(ctx, a, b, c, Complex(x));
            w.g_above = w.g_below = g;
        }
        Complex jump_part = (w.g_above - w.g_below) * Complex(Real(0), ik) * sin_r2;
        Complex even_factor = (n1 > 0) ? Complex(ik) * cos_r2 : cos_r1;
        Complex even_part = (w.g_above + w.g_below) * even_factor;
        Complex denom = pow_positive(Real(std::abs(n1)) / Real(n), d + Real(1)) * gamma_k;
        w.q = (jump_part + even_part) / denom;
        return w;
    }
};

} // namespace detail

// Q(n1, n2) with n2 = n - n1: the hypergeometric convolution weight
inline WeightValue weight_q(const PrecisionContext& ctx, const IdentityParams& p, long n1,
                            long n) {
    PrecisionScope scope(ctx);
    if (p.regime != Regime::theoremA)
        throw regime_error("weight_q: theorem A regime required (theorem B uses thmB_weight_p)");
    detail::WeightEvaluator ev(ctx, p.r1, p.r2, p.d, p.k);
    return ev.eval(n1, n);
}

// the jump component of Q through the closed form of the cut discontinuity:
//   (G+ - G-) = G(k)/G(r2+1) [2 pi i (n/n1 - 1)^r2 / (G(d+1)G(d+r1+1))
//               2F1(k-d-1, d+r2+1; r2+1; 1 - n/n1)],   0 < n1 < n,
// and zero outside (no cut is crossed)
inline Complex weight_q_cut_form(const PrecisionContext& ctx, const IdentityParams& p, long n1,
                                 long n) {
    PrecisionScope scope(ctx);
    if (n1 == 0 || n1 == n) throw domain_error("weight_q_cut_form: n1 in {0, n}");
    if (n1 < 0 || n1 > n) return Complex(0);
    Complex r1 = snap(p.r1), r2 = snap(p.r2), d = snap(p.d);
    Real x = Real(n) / Real(n1);
    Complex inner = hyp2f1(ctx, Complex(p.k) - d - Real(1), d + r2 + Real(1), r2 + Real(1),
                           Complex(Real(1) - x));
    Complex jump = Complex(Real(0), 2 * const_pi()) * pow_positive(x - 1, r2) * inner *
                   reciprocal_gamma(ctx, r2 + Real(1)) *
                   reciprocal_gamma(ctx, d + Real(1)) * reciprocal_gamma(ctx, d + r1 + Real(1));
    // (G+ - G-) i^(k+1) sin(pi r2/2) / (G(k) |n1/n|^(d+1)), G(k) cancelled
    Complex ik1(Real(0), i_pow_even(p.k));
    return jump * ik1 * sin_pi(r2 / Real(2)) / pow_positive(Real(n1) / Real(n), d + Real(1));
}

// Z^(alpha,beta)_d(n) of the boundary terms:
//   zeta(1-beta)(2pi)^beta / (G(alpha+beta+d+1) G(d+beta+1))
// + zeta(1+beta)(2pi)^-beta n^-beta / (G(d+1) G(d+alpha+1))
inline Complex z_term(const PrecisionContext& ctx, const Complex& alpha_, const Complex& beta_,
                      const Complex& d_, long n) {
    PrecisionScope scope(ctx);
    Complex alpha = snap(alpha_), beta = snap(beta_), d = snap(d_);
    if (beta.is_zero()) throw pole_error("z_term: beta = 0 puts zeta at its pole");
    Real two_pi = 2 * const_pi();
    long bint;
    Complex z1m;
    if (near_integer(beta, bint)) {
        // exact zeta values at integers keep trivial zeros exactly zero
        if (1 - bint >= 2 && (1 - bint) % 2 == 1) z1m = riemann_zeta(ctx, Complex(1) - beta);
        else z1m = Complex(zeta_exact(1 - bint).to_real(ctx));
    } else {
        z1m = riemann_zeta(ctx, Complex(1) - beta);
    }
    Complex first = z1m * pow_positive(two_pi, beta) *
                    reciprocal_gamma(ctx, alpha + beta + d + Real(1)) *
                    reciprocal_gamma(ctx, d + beta + Real(1));
    Complex second = riemann_zeta(ctx, Complex(1) + beta) * pow_positive(two_pi, -beta) *
                     pow_positive(Real(n), -beta) * reciprocal_gamma(ctx, d + Real(1)) *
                     reciprocal_gamma(ctx, d + alpha + Real(1));
    return first + second;
}

// cusp-space contribution of Eq (1.7). The sign in front of i^k is the one
// the paper's own displayed examples (and the trace-formula bootstrap)
// force; the theorem statement's transcription carries the opposite one.
inline Complex cusp_term(const PrecisionContext& ctx, const IdentityParams& p, long n,
                         const std::string& cache_dir = "") {
    PrecisionScope scope(ctx);
    long dim = cusp_dim(p.k);
    if (dim == 0) return Complex(0);
    if (dim > 1) throw unsupported_weight_error("cusp_term: dim S_k >= 2 unsupported");
    long need = std::max<long>(n, detail::lambda_terms_needed(
                                      ctx, p.k, pow(Real(10), -static_cast<int>(ctx.working_digits()) + 1)));
    EigenformTable f = eigenform_coeffs_cached(p.k, need, cache_dir);
    Complex r1 = snap(p.r1), r2 = snap(p.r2), d = snap(p.d);
    Real two_pi = 2 * const_pi();
    Complex L1 = l_value(ctx, f, d + r2 + Real(1));
    Complex L2 = l_value(ctx, f, d + r1 + r2 + Real(1));
    Real norm = petersson_norm(ctx, p.k, cache_dir);
    Complex val = Complex(i_pow_even(p.k)) * to_real(factorial_int(p.k - 2)) *
                  pow_positive(2 * two_pi, Complex(Real(1 - p.k))) * pow_positive(two_pi, -r2) *
                  L1 * L2 * reciprocal_gamma(ctx, d + Real(1)) *
                  reciprocal_gamma(ctx, d + r1 + Real(1)) * to_real(f.a(n)) / norm /
                  pow_positive(Real(n), d + r1 + r2);
    return val;
}

struct LhsSum {
    Complex value;
    Real tail_bound;
};

enum class SummationOrder { ascending, descending };

// two-sided convolution sum over n1 in [-N, N] minus {0, n}; deterministic
// ascending-|n1| order with compensated accumulation, empirical tail model
// |term| <= C |n1|^-(Re d + 1 - 0.05) fitted on the outer decade
inline LhsSum lhs_sum(const PrecisionContext& ctx, const IdentityParams& p, long n, long N,
                      SummationOrder order = SummationOrder::ascending) {
    PrecisionScope scope(ctx);
    if (p.regime != Regime::theoremA) throw regime_error("lhs_sum: theorem A regime required");
    if (!(p.d.re > 0)) throw regime_error("lhs_sum: non-convergent regime, Re(d) <= 0");
    if (n < 1) throw domain_error("lhs_sum: need n >= 1");
    if (N < 4 * n) throw domain_error("lhs_sum: need N >= 4n");

    detail::WeightEvaluator ev(ctx, p.r1, p.r2, p.d, p.k);

    std::vector<Complex> s1 = sigma_table(ctx, -ev.r1, N);
    std::vector<Complex> s2 = sigma_table(ctx, -ev.r2, N + n);

    std::vector<long> order_list;
    order_list.reserve(2 * static_cast<std::size_t>(N));
    for (long m = 1; m <= N; ++m) {
        for (long sgn : {+1, -1}) {
            long n1 = sgn * m;
            if (n1 == 0 || n1 == n) continue;
            order_list.push_back(n1);
        }
    }
    if (order == SummationOrder::descending)
        std::reverse(order_list.begin(), order_list.end());

    // Neumaier-compensated accumulation in the fixed order
    Complex acc(0), comp(0);
    auto add = [&](const Complex& t) {
        auto add1 = [](Real& accr, Real& compr, const Real& x) {
            Real sum = accr + x;
            if (abs(accr) >= abs(x)) compr += (accr - sum) + x;
            else compr += (x - sum) + accr;
            accr = sum;
        };
        add1(acc.re, comp.re, t.re);
        add1(acc.im, comp.im, t.im);
    };

    Real c_emp = 0;
    Real tail_exp = ev.d.re + 1 - Real(1) / 20;
    long decade_from = std::max<long>(N / 10, 2 * n);
    for (long n1 : order_list) {
        if (ev.term_vanishes(n1, n)) continue;
        Complex q = ev.eval(n1, n).q;
        Complex term = q * s1[static_cast<std::size_t>(std::abs(n1))] *
                       s2[static_cast<std::size_t>(std::abs(n - n1))];
        add(term);
        if (std::abs(n1) >= decade_from) {
            Real weighted = abs(term) * pow(Real(std::abs(n1)), tail_exp);
            if (weighted > c_emp) c_emp = weighted;
        }
    }
    Complex total = acc + comp;

    // sum_{m > N} m^-q < N^(1-q)/(q-1) + N^-q, both sides of the window
    Real q = tail_exp;
    Real tail_sum = pow(Real(N), Real(1) - q) / (q - 1) + pow(Real(N), -q);
    return {total, 2 * c_emp * tail_sum};
}

struct EvaluationReport {
    long n = 0, N = 0;
    Complex lhs;
    Real lhs_tail_bound;
    Complex z_term_1, z_term_2, cusp;   // signed addends of the right side
    Complex rhs;
    Complex residual;
    Real tolerance;
    bool pass = false;
    double seconds_lhs = 0, seconds_rhs = 0;
};

// assemble both sides of the main identity and compare
inline EvaluationReport verify(const PrecisionContext& ctx, const IdentityParams& p, long n,
                               long N, const Real& tolerance, const std::string& cache_dir = "") {
    PrecisionScope scope(ctx);
    using Clock = std::chrono::steady_clock;
    EvaluationReport rep;
    rep.n = n;
    rep.N = N;
    rep.tolerance = tolerance;

    auto t0 = Clock::now();
    LhsSum lhs = lhs_sum(ctx, p, n, N);
    rep.lhs = lhs.value;
    rep.lhs_tail_bound = lhs.tail_bound;
    rep.seconds_lhs = std::chrono::duration<double>(Clock::now() - t0).count();

    t0 = Clock::now();
    Complex sig1 = sigma(ctx, DivisorIndex(-p.r1), n);
    Complex sig2 = sigma(ctx, DivisorIndex(-p.r2), n);
    rep.z_term_1 = Complex(-i_pow_even(p.k)) * z_term(ctx, p.r1, p.r2, p.d, n) * sig1;
    rep.z_term_2 = -z_term(ctx, p.r2, p.r1, p.d, n) * sig2;
    rep.cusp = cusp_term(ctx, p, n, cache_dir);
    rep.rhs = rep.z_term_1 + rep.z_term_2 + rep.cusp;
    rep.seconds_rhs = std::chrono::duration<double>(Clock::now() - t0).count();

    rep.residual = rep.lhs - rep.rhs;
    rep.pass = abs(rep.residual) <= tolerance + rep.lhs_tail_bound;
    return rep;
}

inline EvaluationReport verify(const PrecisionContext& ctx, const IdentityParams& p, long n,
                               long N) {
    PrecisionScope scope(ctx);
    return verify(ctx, p, n, N, ctx.error_target() * 100, "");
}

} // namespace heckeconv

#endif
