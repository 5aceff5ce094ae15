#ifndef HECKECONV_PRINTED_HPP
#define HECKECONV_PRINTED_HPP

#include "heckeconv/exact_identity.hpp"
#include "heckeconv/thmb.hpp"
#include "heckeconv/elliptic.hpp"
#include <functional>

namespace heckeconv {

// Registry of the displayed identities, each run verbatim from its printed
// form (exact rational arithmetic when the printed constants are rational)
// and compared against the raw pipeline at the same parameters. Three signs
// and one sgn(n1) in the 1.23/1.24 display are corrected to match the
// theorems; see the project notes.
struct PrintedOutcome {
    std::string id;
    long n = 0;
    bool exact = false;          // residual computed in exact arithmetic
    bool exactly_zero = false;   // exact residual vanished
    Complex lhs, rhs, residual;  // printed-identity sides (numeric view)
    Real tail_bound;             // truncation allowance for infinite sums
    Complex raw_residual;        // raw Theorem A/B pipeline at the same parameters
    Real raw_tail_bound;
    bool pass = false;
    std::string note;
};

struct UnknownPrintedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace printed_detail {

// ---- exact finite cases ------------------------------------------------

inline PrintedOutcome osullivan_k8(const PrecisionContext& ctx, long n) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "osullivan_k8";
    out.n = n;
    out.exact = true;
    // sum_{n1<n} (1 - 3 n1/n) sigma1(n1) sigma3(n-n1) = (sigma1 - (6n-5) sigma3)/120
    Rational lhs = 0;
    for (long n1 = 1; n1 < n; ++n1)
        lhs += (Rational(1) - Rational(3 * n1, n)) * sigma_exact(1, n1) * sigma_exact(3, n - n1);
    Rational rhs = (sigma_exact(1, n) - Rational(6 * n - 5) * sigma_exact(3, n)) / 120;
    out.exactly_zero = (lhs == rhs);
    out.lhs = Complex(to_real(lhs));
    out.rhs = Complex(to_real(rhs));
    out.residual = out.lhs - out.rhs;
    out.tail_bound = 0;
    // raw pipeline, exact
    IdentityParams p = make_theorem_a_params(ctx, ComplexRational{1, 0}, ComplexRational{3, 0},
                                             ComplexRational{1, 0});
    auto raw = exact_path::verify_exact(p, n);
    out.raw_residual = Complex(raw.residual.to_real(ctx));
    out.raw_tail_bound = 0;
    out.pass = out.exactly_zero && raw.exactly_zero;
    return out;
}

inline PrintedOutcome k14_r3r5(const PrecisionContext& ctx, long n) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "k14_r3r5";
    out.n = n;
    out.exact = true;
    // sum (10 - 55 n1/n + 66 n1^2/n^2) sigma3 sigma5 = (sigma3(n) - sigma5(n))/24
    Rational lhs = 0;
    for (long n1 = 1; n1 < n; ++n1) {
        Rational w = Rational(10) - Rational(55 * n1, n) + Rational(66 * n1 * n1, (long)n * n);
        lhs += w * sigma_exact(3, n1) * sigma_exact(5, n - n1);
    }
    Rational rhs = (sigma_exact(3, n) - sigma_exact(5, n)) / 24;
    out.exactly_zero = (lhs == rhs);
    out.lhs = Complex(to_real(lhs));
    out.rhs = Complex(to_real(rhs));
    out.residual = out.lhs - out.rhs;
    out.tail_bound = 0;
    IdentityParams p = make_theorem_a_params(ctx, ComplexRational{3, 0}, ComplexRational{5, 0},
                                             ComplexRational{2, 0});
    auto raw = exact_path::verify_exact(p, n);
    out.raw_residual = Complex(raw.residual.to_real(ctx));
    out.raw_tail_bound = 0;
    out.pass = out.exactly_zero && raw.exactly_zero;
    return out;
}

// ---- weight-12/16 critical-value displays -------------------------------

inline PrintedOutcome k12_r3r3(const PrecisionContext& ctx, long n, const std::string& cache) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "k12_r3r3";
    out.n = n;
    Real pi = const_pi();
    Complex lhs(0);
    for (long n1 = 1; n1 < n; ++n1) {
        Real w = pi * Real(3 * n1 - 2 * n) * Real(3 * n1 - n) /
                 (1440 * pow(Real(n), Real(8)));
        lhs += Complex(w * to_real(sigma_exact(3, n1) * sigma_exact(3, n - n1)));
    }
    EigenformTable f = eigenform_coeffs_cached(12, std::max<long>(n, 60), cache);
    Complex L6 = l_value(ctx, f, Complex(6)), L9 = l_value(ctx, f, Complex(9));
    Real norm = petersson_norm(ctx, 12, cache);
    Real z4 = zeta_exact(4).to_real(ctx);
    Complex rhs = Complex(-z4 * to_real(sigma_exact(3, n)) /
                          (4 * pow(pi, Real(3)) * 2 * 120 * pow(Real(n), Real(6))));
    rhs += to_real(factorial_int(10)) * L6 * L9 * to_real(f.a(n)) /
           (pow(4 * pi, Real(11)) * pow(2 * pi, Real(3)) * 2 * 120 * norm * pow(Real(n), Real(8)));
    out.lhs = lhs;
    out.rhs = rhs;
    out.residual = lhs - rhs;
    out.tail_bound = 0;
    IdentityParams p = make_theorem_a_params(ctx, ComplexRational{3, 0}, ComplexRational{3, 0},
                                             ComplexRational{2, 0});
    EvaluationReport rep = verify(ctx, p, n, 4 * n + 8, ctx.error_target(), cache);
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -20) && abs(rep.residual) < pow(Real(10), -20);
    return out;
}

inline PrintedOutcome k16_niebur(const PrecisionContext& ctx, long n, const std::string& cache) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "k16_niebur";
    out.n = n;
    Real pi = const_pi();
    Complex lhs(0);
    for (long n1 = 1; n1 < n; ++n1) {
        Real w = pi * Real(-3 * n * n + 13 * n * n1 - 13 * n1 * n1) /
                 (1814400 * pow(Real(n), Real(12)));
        lhs += Complex(w * to_real(sigma_exact(5, n1) * sigma_exact(5, n - n1)));
    }
    EigenformTable f = eigenform_coeffs_cached(16, std::max<long>(n, 60), cache);
    Complex L8 = l_value(ctx, f, Complex(8)), L13 = l_value(ctx, f, Complex(13));
    Real norm = petersson_norm(ctx, 16, cache);
    Real z6 = zeta_exact(6).to_real(ctx);
    Real g3 = 2, g8 = 5040;
    Complex rhs = Complex(-2 * z6 * to_real(sigma_exact(5, n)) /
                          (pow(2 * pi, Real(5)) * g3 * g8 * pow(Real(n), Real(10))));
    rhs += to_real(factorial_int(14)) * L8 * L13 * to_real(f.a(n)) /
           (pow(2 * pi, Real(5)) * pow(4 * pi, Real(15)) * g3 * g8 * norm * pow(Real(n), Real(12)));
    out.lhs = lhs;
    out.rhs = rhs;
    out.residual = lhs - rhs;
    out.tail_bound = 0;
    IdentityParams p = make_theorem_a_params(ctx, ComplexRational{5, 0}, ComplexRational{5, 0},
                                             ComplexRational{2, 0});
    EvaluationReport rep = verify(ctx, p, n, 4 * n + 8, ctx.error_target(), cache);
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -20) && abs(rep.residual) < pow(Real(10), -20);
    return out;
}

// ---- Eq (1.2): the one-third family -------------------------------------

inline PrintedOutcome eq1_2(const PrecisionContext& ctx, long n, long N,
                            const std::string& cache) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "eq1.2";
    out.n = n;
    Real pi = const_pi();
    Real third = Real(1) / 3;

    auto p5 = [](const Real& a, const Real& b) {
        return ((((Real(11) * a - 440 * b) * a + 2288 * b * b) * a - 2860 * b * b * b) * a +
                910 * b * b * b * b) * a - 52 * b * b * b * b * b;
    };
    Real psi_c = 243 * sqrt(Real(3)) / 25625600;
    auto psi = [&](long n1, long n2) {
        Real a(n1), b(n2);
        return psi_c * (pow(abs(a), third) * p5(a, b) + pow(abs(b), third) * p5(b, a));
    };

    std::vector<Complex> st = sigma_table(ctx, Complex(-third), N + n);
    Complex acc(0);
    Real c_emp = 0;
    Real tail_exp = Real(14) / 3 + 1 - Real(1) / 20;
    for (long m = 1; m <= N; ++m) {
        for (long sgn : {1, -1}) {
            long n1 = sgn * m;
            if (n1 == 0 || n1 == n) continue;
            Complex term = Complex(psi(n1, n - n1)) * st[static_cast<std::size_t>(std::abs(n1))] *
                           st[static_cast<std::size_t>(std::abs(n - n1))];
            acc += term;
            if (m >= N / 10) {
                Real w = abs(term) * pow(Real(m), tail_exp);
                if (w > c_emp) c_emp = w;
            }
        }
    }
    out.lhs = acc;
    out.tail_bound = 2 * c_emp * (pow(Real(N), 1 - tail_exp) / (tail_exp - 1) + pow(Real(N), -tail_exp));

    EigenformTable f = eigenform_coeffs_cached(12, std::max<long>(n, 60), cache);
    Complex L6 = l_value(ctx, f, Complex(6));
    Complex L19_3 = l_value(ctx, f, Complex(Real(19) / 3));
    Real norm = petersson_norm(ctx, 12, cache);
    Complex z23 = riemann_zeta(ctx, Complex(2 * third)), z43 = riemann_zeta(ctx, Complex(4 * third));
    Complex g19_3 = gamma(ctx, Complex(Real(19) / 3)), g17_3 = gamma(ctx, Complex(Real(17) / 3));
    Complex sig13n = sigma(ctx, DivisorIndex(Complex(third)), n);
    Complex bracket = pow_positive(2 * pi, Complex(third)) * z23 / g19_3 +
                      z43 * pow_positive(Real(n), Complex(-third)) /
                          (pow_positive(2 * pi, Complex(third)) * g17_3);
    Complex rhs = Complex(-pow(Real(n), Real(5)) / 60) * sig13n * bracket;
    rhs += Real(945) / (pow(Real(2), Real(52) / 3) * pow(pi, Real(34) / 3)) / g17_3 *
           L6 * L19_3 * to_real(f.a(n)) / norm;
    out.rhs = rhs;
    out.residual = out.lhs - rhs;

    IdentityParams p = make_theorem_a_params(
        ctx, ComplexRational{Rational(1, 3), 0}, ComplexRational{Rational(1, 3), 0},
        ComplexRational{Rational(14, 3), 0});
    EvaluationReport rep = verify(ctx, p, n, N, pow(Real(10), -12), cache);
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -12) + out.tail_bound && rep.pass;
    return out;
}

// ---- Q1 (k = 6 half-integer family) --------------------------------------

inline PrintedOutcome q1_k6(const PrecisionContext& ctx, long n, long N) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "q1_k6";
    out.n = n;
    Real h = Real(1) / 2;
    auto q1 = [&](long n1l, long n2l) {
        Real n1(n1l), n2(n2l), nn(n1l + n2l);
        Real poly = n1 * n1 * n2 / 3 + n1 * n1 * n1 / 45 + n2 * n2 * n2 / 9 - n1 * n2 * n2 +
                    8 * sqrt(abs(n1)) * abs(n2) * sqrt(abs(n2)) * (n1 / 9 - n2 / 15);
        return 2 * sqrt(Real(2)) * poly / (nn * nn * nn);
    };
    std::vector<Complex> s1 = sigma_table(ctx, Complex(-h), N + n);
    std::vector<Complex> s2 = sigma_table(ctx, Complex(-3 * h), N + n);
    Complex acc(0);
    Real c_emp = 0;
    Real tail_exp = Real(2) - Real(1) / 20;
    for (long m = 1; m <= N; ++m) {
        for (long sgn : {1, -1}) {
            long n1 = sgn * m;
            if (n1 == 0 || n1 == n) continue;
            Complex term = Complex(q1(n1, n - n1)) * s1[static_cast<std::size_t>(std::abs(n1))] *
                           s2[static_cast<std::size_t>(std::abs(n - n1))];
            acc += term;
            if (m >= N / 10) c_emp = std::max(c_emp, abs(term) * pow(Real(m), tail_exp));
        }
    }
    out.lhs = acc;
    out.tail_bound = 2 * c_emp * (pow(Real(N), 1 - tail_exp) / (tail_exp - 1) + pow(Real(N), -tail_exp));
    Real pi = const_pi();
    Complex b1 = riemann_zeta(ctx, Complex(-h)) * pow_positive(2 * pi, Complex(3 * h)) /
                     (gamma(ctx, Complex(4)) * gamma(ctx, Complex(Real(3.5)))) +
                 riemann_zeta(ctx, Complex(Real(2.5))) * pow_positive(Real(n), Complex(-3 * h)) /
                     (pow_positive(2 * pi, Complex(3 * h)) * gamma(ctx, Complex(2)) *
                      gamma(ctx, Complex(Real(2.5))));
    Complex b2 = riemann_zeta(ctx, Complex(h)) * pow_positive(2 * pi, Complex(h)) /
                     (gamma(ctx, Complex(4)) * gamma(ctx, Complex(Real(2.5)))) +
                 riemann_zeta(ctx, Complex(Real(1.5))) * pow_positive(Real(n), Complex(-h)) /
                     (pow_positive(2 * pi, Complex(h)) * gamma(ctx, Complex(2)) *
                      gamma(ctx, Complex(Real(3.5))));
    Complex rhs = b1 * sigma(ctx, DivisorIndex(Complex(-h)), n) -
                  b2 * sigma(ctx, DivisorIndex(Complex(-3 * h)), n);
    out.rhs = rhs;
    out.residual = acc - rhs;
    IdentityParams p = make_theorem_a_params(
        ctx, ComplexRational{Rational(1, 2), 0}, ComplexRational{Rational(3, 2), 0},
        ComplexRational{Rational(1), 0});
    EvaluationReport rep = verify(ctx, p, n, N, pow(Real(10), -10), "");
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -10) + out.tail_bound && rep.pass;
    return out;
}

// ---- Q2/Q3 (complex-index displays, Section 1.1.2) -----------------------

inline PrintedOutcome q2_vanishing(const PrecisionContext& ctx, long n, long N) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "q2_vanishing";
    out.n = n;
    out.note = "parameters r1 = r2 = 1+i, d = 1-i (display's r1 = -r2 cannot give k = 6)";
    Complex one_i{Real(1), Real(1)};
    auto p3 = [&](const Complex& a, const Complex& b) {
        return a * a + Complex(Real(2), Real(-6)) * a * b - Complex(5) * b * b;
    };
    Real shp = sinh(const_pi() / 2);
    std::vector<Complex> st = sigma_table(ctx, -one_i, N + n);
    Complex acc(0);
    Real c_emp = 0;
    Real tail_exp = Real(2) - Real(1) / 20;
    for (long m = 1; m <= N; ++m) {
        for (long sgn : {1, -1}) {
            long n1 = sgn * m;
            if (n1 == 0 || n1 == n) continue;
            long n2 = n - n1;
            Complex w = Complex(shp) / (Complex(10) * pow_positive(Real(n), Complex(Real(3), Real(1)))) *
                        (pow_positive(Real(std::abs(n1)), one_i) * p3(Complex(n1), Complex(n2)) -
                         pow_positive(Real(std::abs(n2)), one_i) * p3(Complex(n2), Complex(n1)));
            Complex term = w * st[static_cast<std::size_t>(std::abs(n1))] *
                           st[static_cast<std::size_t>(std::abs(n2))];
            acc += term;
            if (m >= N / 10) c_emp = std::max(c_emp, abs(term) * pow(Real(m), tail_exp));
        }
    }
    out.lhs = acc;
    out.rhs = Complex(0);
    out.residual = acc;
    out.tail_bound = 2 * c_emp * (pow(Real(N), 1 - tail_exp) / (tail_exp - 1) + pow(Real(N), -tail_exp));
    IdentityParams p = make_theorem_a_params(ctx, one_i, one_i, Complex(Real(1), Real(-1)));
    EvaluationReport rep = verify(ctx, p, n, N, pow(Real(10), -10), "");
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -10) + out.tail_bound && rep.pass;
    return out;
}

inline PrintedOutcome q3_k8(const PrecisionContext& ctx, long n, long N) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "q3_k8";
    out.n = n;
    Complex iu{Real(0), Real(1)};
    auto p4 = [&](const Complex& a, const Complex& b) {
        return a * a * a - Complex(Real(3), Real(6)) * a * a * b -
               Complex(Real(3), Real(-6)) * a * b * b + b * b * b;
    };
    Real chp = cosh(const_pi() / 2);
    std::vector<Complex> st = sigma_table(ctx, -iu, N + n);
    Complex acc(0);
    Real c_emp = 0;
    Real tail_exp = Real(4) - Real(1) / 20;
    for (long m = 1; m <= N; ++m) {
        for (long sgn : {1, -1}) {
            long n1 = sgn * m;
            if (n1 == 0 || n1 == n) continue;
            long n2 = n - n1;
            Complex w = Complex(-chp) / (Complex(30) * pow_positive(Real(n), Complex(Real(3), Real(1)))) *
                        (pow_positive(Real(std::abs(n1)), iu) * p4(Complex(n1), Complex(n2)) +
                         pow_positive(Real(std::abs(n2)), iu) * p4(Complex(n2), Complex(n1)));
            Complex term = w * st[static_cast<std::size_t>(std::abs(n1))] *
                           st[static_cast<std::size_t>(std::abs(n2))];
            acc += term;
            if (m >= N / 10) c_emp = std::max(c_emp, abs(term) * pow(Real(m), tail_exp));
        }
    }
    out.lhs = acc;
    out.tail_bound = 2 * c_emp * (pow(Real(N), 1 - tail_exp) / (tail_exp - 1) + pow(Real(N), -tail_exp));
    Real pi2 = 2 * const_pi();
    Complex bracket = riemann_zeta(ctx, Complex(Real(1), Real(-1))) * pow_positive(pi2, iu) /
                          gamma(ctx, Complex(Real(4), Real(1))) +
                      riemann_zeta(ctx, Complex(Real(1), Real(1))) *
                          pow_positive(Real(n), -iu) /
                          (pow_positive(pi2, iu) * gamma(ctx, Complex(Real(4), Real(-1))));
    Complex rhs = Complex(Real(-1), Real(0)) / 3 * sigma(ctx, DivisorIndex(-iu), n) * bracket;
    out.rhs = rhs;
    out.residual = acc - rhs;
    IdentityParams p = make_theorem_a_params(ctx, iu, iu, Complex(Real(3), Real(-1)));
    EvaluationReport rep = verify(ctx, p, n, N, pow(Real(10), -10), "");
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -10) + out.tail_bound && rep.pass;
    return out;
}

// ---- Q4 (elliptic family, Section 1.1.3) ---------------------------------

inline Complex q4_weight(const PrecisionContext& ctx, long n1l, long n2l) {
    // defined for n1 > 0; q_K, q_E are the cut averages of K, E at n/n1
    Real n1(n1l), n2(n2l), nn(n1l + n2l);
    Real x = nn / n1;
    Complex qk, qe;
    if (x > 1) {
        auto [kp, ep] = elliptic_ke_cut(ctx, x);
        qk = kp.half_sum();
        qe = ep.half_sum();
    } else {
        qk = elliptic_k(ctx, Complex(x));
        qe = elliptic_e(ctx, Complex(x));
    }
    Real pref = Real(128) / (1575 * const_pi()) * sqrt(n1) / pow(nn, Real(3.5));
    Complex inner = Complex(n2 * (n1 * n1 + 74 * n1 * n2 - 55 * n2 * n2)) * qk +
                    Complex(2 * n1 * n1 * n1 + 17 * n1 * n1 * n2 - 108 * n1 * n2 * n2 +
                            5 * n2 * n2 * n2) * qe;
    return Complex(pref) * inner;
}

inline PrintedOutcome q4_elliptic(const PrecisionContext& ctx, long n, long N) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "q4_elliptic";
    out.n = n;
    std::vector<Complex> s1 = sigma_table(ctx, Complex(-1), N + n);
    std::vector<Complex> s2 = sigma_table(ctx, Complex(-2), N + n);
    Complex acc(0);
    Real c_emp = 0;
    Real tail_exp = Real(1.5) - Real(1) / 20;
    for (long n1 = 1; n1 <= N; ++n1) {  // weight supported on n1 > 0
        if (n1 == n) continue;
        Complex term = q4_weight(ctx, n1, n - n1) * s1[static_cast<std::size_t>(n1)] *
                       s2[static_cast<std::size_t>(std::abs(n - n1))];
        acc += term;
        if (n1 >= N / 10) c_emp = std::max(c_emp, abs(term) * pow(Real(n1), tail_exp));
    }
    out.lhs = acc;
    out.tail_bound = c_emp * (pow(Real(N), 1 - tail_exp) / (tail_exp - 1) + pow(Real(N), -tail_exp));
    Real pi = const_pi();
    Complex z3 = riemann_zeta(ctx, Complex(3));
    Complex rhs = sigma(ctx, DivisorIndex(-1L), n) *
                  (z3 * 2 / (3 * pow(pi, Real(3)) * Real(n) * Real(n)) - Complex(128 * pi / 4725));
    rhs += Complex(Real(4) * (16 * n - 7) / (315 * Real(n))) * sigma(ctx, DivisorIndex(-2L), n);
    out.rhs = rhs;
    out.residual = acc - rhs;
    IdentityParams p = make_theorem_a_params(
        ctx, ComplexRational{Rational(1), 0}, ComplexRational{Rational(2), 0},
        ComplexRational{Rational(1, 2), 0});
    EvaluationReport rep = verify(ctx, p, n, N, pow(Real(10), -10), "");
    out.raw_residual = rep.residual;
    out.raw_tail_bound = rep.lhs_tail_bound;
    out.pass = abs(out.residual) < pow(Real(10), -10) + out.tail_bound && rep.pass;
    return out;
}

// ---- Theorem B displays ---------------------------------------------------

// lambda fit: P(n1,n2) restricted to the sgn part equals lambda * w(n1,n2)
// with w the printed weight; fitted exactly at one point, verified elsewhere
inline PiValue fit_lambda(const IdentityParams& p, long n,
                          const std::function<Rational(long, long)>& w_printed) {
    long n1 = -n - 1;  // outside (0, n): only the sgn part of P survives
    PiValue pv = thmB_weight_p_exact(p, n1, n);
    Rational wv = w_printed(n1, n - n1);
    return pv / wv;
}

inline PrintedOutcome eq1_19(const PrecisionContext& ctx, long n, const std::string& cache) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "eq1.19";
    out.n = n;
    out.note = "printed Eq 1.21 cusp term sign corrected to match the theorems";
    IdentityParams p = make_theorem_b_params(ctx, 7, 7, -2);
    auto w = [](long n1, long n2) {
        long s = n1 > 0 ? 1 : -1;
        return Rational(s) * Rational(n2 - n1, n1 + n2);
    };
    PiValue lam = fit_lambda(p, n, w);
    // scale checks at sample points
    for (long n1 : {-1L, -5L, 2 * n + 3}) {
        if (n1 == 0 || n1 == n) continue;
        PiValue lhs = thmB_weight_p_exact(p, n1, n);
        PiValue rhs = lam * PiValue(w(n1, n - n1));
        if (!(lhs - rhs).is_zero())
            throw precision_error("eq1.19: sgn-part shape mismatch against P");
    }
    Real lam_r = lam.to_real(ctx);

    // pipeline value of the regularized printed sum:
    // (thmB_value - sum_{0<n1<n} [P - lam w] sigma sigma) / lam
    Complex interior(0);
    for (long n1 = 1; n1 < n; ++n1) {
        PiValue dif = thmB_weight_p_exact(p, n1, n) - lam * PiValue(w(n1, n - n1));
        interior += Complex(dif.to_real(ctx) *
                            to_real(sigma_exact(-7, n1) * sigma_exact(-7, n - n1)));
    }
    Complex regularized = (thmB_value(ctx, p, n, cache) - interior) / Complex(lam_r);
    out.lhs = regularized;

    // assembled printed value (Eqs 1.20-1.21), cusp sign per the ledger
    Real pi = const_pi();
    Complex printed(0);
    for (long n1 = 1; n1 <= n - 1; ++n1) {
        long n2 = n - n1;
        Real poly = Real(14) * pow(Real(n), Real(3)) * n1 * n1 + 28 * Real(n) * Real(n) * pow(Real(n1), Real(3)) +
                    5 * pow(Real(n), Real(4)) * n1 + pow(Real(n), Real(5)) +
                    42 * Real(n) * pow(Real(n1), Real(4)) + 42 * pow(Real(n1), Real(5));
        printed += Complex(2 * pow(Real(n2), Real(7)) / pow(Real(n), Real(12)) * poly *
                           to_real(sigma_exact(-7, n1) * sigma_exact(-7, n2)));
    }
    Complex zp6 = zeta_derivative(ctx, Complex(-6));
    printed += (Complex(Real(33) / (30 * pow(Real(n), Real(7)))) -
                Complex(Real(32) / 90 * pow(pi, Real(6))) * zp6) *
               Complex(to_real(sigma_exact(-7, n)));
    EigenformTable f = eigenform_coeffs_cached(12, std::max<long>(n, 60), cache);
    Complex L6 = l_value(ctx, f, Complex(6)), L13 = l_value(ctx, f, Complex(13));
    Real norm = petersson_norm(ctx, 12, cache);
    printed -= to_real(factorial_int(10) * factorial_int(12)) /
               (3 * pow(Real(2), Real(30)) * pow(pi, Real(19)) * 120) * L6 * L13 *
               to_real(f.a(n)) / (norm * pow(Real(n), Real(12)));
    out.rhs = printed;
    out.residual = regularized - printed;
    out.tail_bound = 0;
    out.raw_residual = out.residual;
    out.raw_tail_bound = 0;
    out.pass = abs(out.residual) < pow(Real(10), -15) * (abs(printed) + 1);
    return out;
}

inline PrintedOutcome eq1_23(const PrecisionContext& ctx, long n, const std::string& cache) {
    PrecisionScope scope(ctx);
    PrintedOutcome out;
    out.id = "eq1.23";
    out.n = n;
    out.note = "printed Eq 1.23/1.24: sgn(n1) restored; finite-sum, sigma_13-bracket and "
               "cusp signs corrected to match the theorems";
    IdentityParams p = make_theorem_b_params(ctx, 13, 11, -4);
    auto w = [](long n1, long n2) {
        long s = n1 > 0 ? 1 : -1;
        long nn = n1 + n2;
        Rational poly = Rational(6) * n1 * n1 * n1 - Rational(18) * n1 * n1 * n2 +
                        Rational(22) * n1 * n2 * n2 - Rational(11) * n2 * n2 * n2;
        return Rational(s) * poly / (Rational(nn) * nn * nn);
    };
    PiValue lam = fit_lambda(p, n, w);
    for (long n1 : {-2L, -7L, n + 4}) {
        if (n1 == 0 || n1 == n) continue;
        PiValue lhs = thmB_weight_p_exact(p, n1, n);
        PiValue rhs = lam * PiValue(w(n1, n - n1));
        if (!(lhs - rhs).is_zero())
            throw precision_error("eq1.23: sgn-part shape mismatch against P");
    }
    Real lam_r = lam.to_real(ctx);
    Complex interior(0);
    for (long n1 = 1; n1 < n; ++n1) {
        PiValue dif = thmB_weight_p_exact(p, n1, n) - lam * PiValue(w(n1, n - n1));
        interior += Complex(dif.to_real(ctx) *
                            to_real(sigma_exact(-13, n1) * sigma_exact(-11, n - n1)));
    }
    Complex regularized = (thmB_value(ctx, p, n, cache) - interior) / Complex(lam_r);
    out.lhs = regularized;

    Real pi = const_pi();
    Complex printed(0);
    for (long n1 = 1; n1 <= n - 1; ++n1) {
        long n2 = n - n1;
        Real nn(n), x1(n1);
        Real poly = 11 * pow(nn, Real(9)) + 66 * pow(nn, Real(8)) * x1 +
                    216 * pow(nn, Real(7)) * x1 * x1 + 504 * pow(nn, Real(6)) * pow(x1, Real(3)) +
                    924 * pow(nn, Real(5)) * pow(x1, Real(4)) + 1386 * pow(nn, Real(4)) * pow(x1, Real(5)) +
                    1716 * pow(nn, Real(3)) * pow(x1, Real(6)) + 1716 * nn * nn * pow(x1, Real(7)) +
                    1287 * nn * pow(x1, Real(8)) + 572 * pow(x1, Real(9));
        // sign corrected: the i^(k+r2+1) = i^30 = -1 factor was dropped in print
        printed -= Complex(2 * pow(Real(n2), Real(11)) / pow(nn, Real(20)) * poly *
                           to_real(sigma_exact(-13, n1) * sigma_exact(-11, n2)));
    }
    Complex zp10 = zeta_derivative(ctx, Complex(-10));
    Complex zp12 = zeta_derivative(ctx, Complex(-12));
    // sigma_13 bracket sign corrected
    printed += (Complex(Real(-223193) / (1260 * pow(Real(n), Real(11)))) +
                Complex(Real(16) / 4725 * pow(pi, Real(10))) * zp10) *
               Complex(to_real(sigma_exact(-13, n)));
    printed += (Complex(Real(323) / pow(Real(n), Real(13))) -
                Complex(Real(8) / 42525 * pow(pi, Real(12))) * zp12) *
               Complex(to_real(sigma_exact(-11, n)));
    EigenformTable f = eigenform_coeffs_cached(18, std::max<long>(n, 60), cache);
    Complex L8 = l_value(ctx, f, Complex(8)), L21 = l_value(ctx, f, Complex(21));
    Real norm = petersson_norm(ctx, 18, cache);
    // cusp sign corrected (printed minus)
    printed += to_real(factorial_int(16) * factorial_int(20)) /
               (5 * pow(Real(2), Real(47)) * pow(pi, Real(29)) * to_real(factorial_int(9))) *
               L8 * L21 * to_real(f.a(n)) / (norm * pow(Real(n), Real(20)));
    out.rhs = printed;
    out.residual = regularized - printed;
    out.tail_bound = 0;
    out.raw_residual = out.residual;
    out.raw_tail_bound = 0;
    out.pass = abs(out.residual) < pow(Real(10), -15) * (abs(printed) + 1);
    return out;
}

} // namespace printed_detail

struct PrintedCaseOptions {
    long truncation = 20000;
    std::string cache_dir;
};

inline PrintedOutcome printed_case(const PrecisionContext& ctx, const std::string& id, long n,
                                   const PrintedCaseOptions& opt = {}) {
    using namespace printed_detail;
    if (id == "osullivan_k8") return osullivan_k8(ctx, n);
    if (id == "k14_r3r5") return k14_r3r5(ctx, n);
    if (id == "k12_r3r3") return k12_r3r3(ctx, n, opt.cache_dir);
    if (id == "k16_niebur") return k16_niebur(ctx, n, opt.cache_dir);
    if (id == "eq1.2") return eq1_2(ctx, n, opt.truncation, opt.cache_dir);
    if (id == "q1_k6") return q1_k6(ctx, n, opt.truncation);
    if (id == "q2_vanishing") return q2_vanishing(ctx, n, opt.truncation);
    if (id == "q3_k8") return q3_k8(ctx, n, opt.truncation);
    if (id == "q4_elliptic") return q4_elliptic(ctx, n, opt.truncation);
    if (id == "eq1.19" || id == "eq1.21") return eq1_19(ctx, n, opt.cache_dir);
    if (id == "eq1.23" || id == "eq1.24") return eq1_23(ctx, n, opt.cache_dir);
    if (id == "conjecture_CGPWW")
        throw UnknownPrintedCase(
            "conjecture_CGPWW: the phi-weighted sum of Eq 1.9 is prior work's identity "
            "(even-index family), outside this registry");
    throw UnknownPrintedCase("printed_case: unknown id '" + id + "'");
}

inline std::vector<std::string> printed_case_ids() {
    return {"osullivan_k8", "k14_r3r5", "k12_r3r3", "k16_niebur", "eq1.2",
            "q1_k6", "q2_vanishing", "q3_k8", "q4_elliptic", "eq1.19", "eq1.23"};
}

} // namespace heckeconv

#endif
