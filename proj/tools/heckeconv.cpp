// heckeconv: batch verification of the hypergeometric divisor-convolution
// identities, regularized values, and the independent self-test oracles.
//
//   heckeconv verify --r1 1 --r2 3 --d 1 --n 1..50 --exact
//   heckeconv verify --r1 1/3 --r2 1/3 --d 14/3 --n 1..5 --terms 20000 --prec 50
//   heckeconv regularize --case eq1.19 --n 1..20
//   heckeconv selftest --suite kernel --quick
//
// Exit codes: 0 success, 1 numerical failure, 2 usage/regime error.

#include "heckeconv/heckeconv.hpp"
#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>

using namespace heckeconv;
using json = nlohmann::ordered_json;

namespace {

struct ParsedParam {
    Complex value;
    std::optional<ComplexRational> exact;
    std::string text;
};

Rational parse_rational_part(const std::string& s, bool& exact, bool& is_decimal) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw domain_error("parameter: zero denominator");
        return Rational(num) / Rational(den);
    }
    if (s.find('.') != std::string::npos) {
        exact = false;
        is_decimal = true;
        return Rational(0);
    }
    return Rational(Int(s));
}

// accepts "p/q", integers, decimals, and "a+bi" combinations thereof;
// decimals are tagged inexact and disable the exact path
ParsedParam parse_param(const PrecisionContext& ctx, std::string s) {
    PrecisionScope scope(ctx);
    ParsedParam out;
    out.text = s;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw domain_error("empty parameter");
    std::string re_part = s, im_part;
    bool has_im = false;
    if (s.back() == 'i' || s.back() == 'I') {
        has_im = true;
        std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' && body[i - 1] != '.') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            re_part = "0";
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);
        }
    }
    bool exact = true, dec_re = false, dec_im = false;
    Rational re_q = parse_rational_part(re_part, exact, dec_re);
    Rational im_q = has_im ? parse_rational_part(im_part, exact, dec_im) : Rational(0);
    if (exact) {
        out.exact = ComplexRational{re_q, im_q};
        out.value = Complex(to_real(re_q), to_real(im_q));
    } else {
        Real re_r = dec_re ? Real(re_part.c_str()) : to_real(re_q);
        Real im_r = 0;
        if (has_im) {
            if (dec_im) {
                std::string t = im_part;
                if (t == "+" || t.empty()) t = "1";
                if (t == "-") t = "-1";
                im_r = Real(t.c_str());
            } else {
                im_r = to_real(im_q);
            }
        }
        out.value = Complex(re_r, im_r);
    }
    return out;
}

std::string param_to_text(const ComplexRational& q) {
    std::string s = q.re.str();
    if (q.im != 0) {
        std::string im = q.im.str();
        if (!im.empty() && im[0] != '-') s += "+";
        s += im + "i";
    }
    return s;
}

std::vector<long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stol(s)};
    long lo = std::stol(s.substr(0, dots));
    long hi = std::stol(s.substr(dots + 2));
    if (lo < 1 || hi < lo) throw domain_error("bad n range");
    std::vector<long> r;
    for (long n = lo; n <= hi; ++n) r.push_back(n);
    return r;
}

json complex_to_json(const PrecisionContext& ctx, const Complex& z) {
    PrecisionScope scope(ctx);
    unsigned digs = std::min<unsigned>(ctx.digits(), 40);
    return json::array({z.re.str(digs), z.im.str(digs)});
}

json real_to_json(const PrecisionContext& ctx, const Real& x) {
    PrecisionScope scope(ctx);
    return x.str(std::min<unsigned>(ctx.digits(), 40));
}

struct OutputOptions {
    std::string format = "json";
    bool timings = false;
};

void emit_report(const PrecisionContext& ctx, const OutputOptions& oo, const std::string& r1t,
                 const std::string& r2t, const std::string& dt, long k,
                 const EvaluationReport& rep) {
    PrecisionScope scope(ctx);
    if (oo.format == "json") {
        json j;
        j["params"] = {{"r1", r1t}, {"r2", r2t}, {"d", dt}, {"k", k}, {"regime", "theoremA"}};
        j["n"] = rep.n;
        j["lhs"] = {{"value", complex_to_json(ctx, rep.lhs)},
                    {"tail", real_to_json(ctx, rep.lhs_tail_bound)}};
        j["rhs"] = {{"z1", complex_to_json(ctx, rep.z_term_1)},
                    {"z2", complex_to_json(ctx, rep.z_term_2)},
                    {"cusp", complex_to_json(ctx, rep.cusp)}};
        Real scale = std::max(abs(rep.lhs), abs(rep.rhs));
        Real rel = scale.is_zero() ? abs(rep.residual) : abs(rep.residual) / scale;
        j["residual"] = {{"abs", real_to_json(ctx, abs(rep.residual))},
                         {"rel", real_to_json(ctx, rel)}};
        j["pass"] = rep.pass;
        if (oo.timings)
            j["timings"] = {{"lhs_seconds", rep.seconds_lhs}, {"rhs_seconds", rep.seconds_rhs}};
        std::cout << j.dump() << "\n";
    } else if (oo.format == "csv") {
        std::cout << rep.n << "," << rep.lhs.re.str(30) << "," << rep.rhs.re.str(30) << ","
                  << abs(rep.residual).str(8) << "," << rep.lhs_tail_bound.str(8) << ","
                  << (rep.pass ? "pass" : "fail") << "\n";
    } else {
        std::cout << "n=" << rep.n << "  |residual|=" << abs(rep.residual).str(6)
                  << "  tail<=" << rep.lhs_tail_bound.str(4) << "  "
                  << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
}

json record_to_json(const PrecisionContext& ctx, const ResidualRecord& rec, bool pass) {
    json j;
    j["check"] = rec.name;
    j["inputs"] = rec.inputs;
    j["left"] = complex_to_json(ctx, rec.left);
    j["right"] = complex_to_json(ctx, rec.right);
    j["residual"] = {{"abs", real_to_json(ctx, rec.abs_residual)},
                     {"rel", real_to_json(ctx, rec.rel_residual)}};
    j["truncation"] = rec.truncation;
    j["pass"] = pass;
    return j;
}

int run_verify(const PrecisionContext& ctx, const OutputOptions& oo, const std::string& r1s,
               const std::string& r2s, const std::string& ds, const std::string& ns, long terms,
               bool exact_mode, const std::string& tol_s, const std::string& cache_dir) {
    ParsedParam r1 = parse_param(ctx, r1s), r2 = parse_param(ctx, r2s), d = parse_param(ctx, ds);
    IdentityParams p = (r1.exact && r2.exact && d.exact)
                           ? make_theorem_a_params(ctx, *r1.exact, *r2.exact, *d.exact)
                           : make_theorem_a_params(ctx, r1.value, r2.value, d.value);
    std::vector<long> nn = parse_range(ns);
    bool all_pass = true;

    if (exact_mode) {
        if (!p.integer_triple())
            throw regime_error("--exact requires integer r1, r2, d");
        if (cusp_dim(p.k) != 0)
            throw regime_error("--exact requires an empty cusp space (k in {6,8,10,14})");
        for (long n : nn) {
            auto rep = exact_path::verify_exact(p, n);
            bool pass = rep.exactly_zero;
            all_pass = all_pass && pass;
            if (oo.format == "json") {
                json j;
                j["params"] = {{"r1", param_to_text(*p.r1x)}, {"r2", param_to_text(*p.r2x)},
                               {"d", param_to_text(*p.dx)}, {"k", p.k}, {"regime", "theoremA"}};
                j["n"] = n;
                j["mode"] = "exact";
                j["lhs"] = rep.lhs.str();
                j["rhs"] = rep.rhs.str();
                j["residual"] = rep.residual.str();
                j["pass"] = pass;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "n=" << n << "  residual=" << rep.residual.str() << "  "
                          << (pass ? "PASS (exact zero)" : "FAIL") << "\n";
            }
        }
        return all_pass ? 0 : 1;
    }

    PrecisionScope scope(ctx);
    Real tol = tol_s.empty() ? ctx.error_target() * 100 : Real(tol_s.c_str());
    for (long n : nn) {
        long N = std::max(terms, 4 * n + 4);
        EvaluationReport rep = verify(ctx, p, n, N, tol, cache_dir);
        all_pass = all_pass && rep.pass;
        emit_report(ctx, oo, r1.text, r2.text, d.text, p.k, rep);
    }
    return all_pass ? 0 : 1;
}

int run_regularize(const PrecisionContext& ctx, const OutputOptions& oo,
                   const std::string& case_id, const std::string& r1s, const std::string& r2s,
                   const std::string& ds, const std::string& ns, const std::string& cache_dir) {
    std::vector<long> nn = parse_range(ns);
    bool all_pass = true;
    PrecisionScope scope(ctx);
    if (!case_id.empty()) {
        for (long n : nn) {
            PrintedOutcome o = printed_case(ctx, case_id, n, {20000, cache_dir});
            all_pass = all_pass && o.pass;
            if (oo.format == "json") {
                json j;
                j["case"] = o.id;
                j["n"] = n;
                j["regularized"] = complex_to_json(ctx, o.lhs);
                j["printed"] = complex_to_json(ctx, o.rhs);
                j["residual_abs"] = real_to_json(ctx, abs(o.residual));
                j["pass"] = o.pass;
                if (!o.note.empty()) j["note"] = o.note;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << o.id << " n=" << n << " |resid|=" << abs(o.residual).str(6) << " "
                          << (o.pass ? "PASS" : "FAIL") << "\n";
            }
        }
        return all_pass ? 0 : 1;
    }
    ParsedParam r1 = parse_param(ctx, r1s), r2 = parse_param(ctx, r2s), d = parse_param(ctx, ds);
    if (!(r1.exact && r2.exact && d.exact))
        throw regime_error("regularize needs exact integer parameters");
    IdentityParams p = make_theorem_b_params(ctx, numerator(r1.exact->re).convert_to<long>(),
                                             numerator(r2.exact->re).convert_to<long>(),
                                             numerator(d.exact->re).convert_to<long>());
    for (long n : nn) {
        Complex v = thmB_value(ctx, p, n, cache_dir);
        if (oo.format == "json") {
            json j;
            j["params"] = {{"r1", param_to_text(*p.r1x)}, {"r2", param_to_text(*p.r2x)},
                           {"d", param_to_text(*p.dx)}, {"k", p.k}, {"regime", "theoremB"}};
            j["n"] = n;
            j["regularized_value"] = complex_to_json(ctx, v);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "n=" << n << "  value=" << to_string(v, 30) << "\n";
        }
    }
    return 0;
}

int run_selftest(const PrecisionContext& ctx_in, const OutputOptions&, std::string suite,
                 long k_opt, bool quick, const std::string& cache_dir) {
    bool all_pass = true;
    auto emit = [&](const ResidualRecord& rec, const Real& tol) {
        bool pass = rec.abs_residual < tol;
        all_pass = all_pass && pass;
        std::cout << record_to_json(ctx_in, rec, pass).dump() << "\n";
    };
    if (suite.empty()) suite = "all";

    if (suite == "petersson" || suite == "all") {
        PrecisionContext ctx(25);
        PrecisionScope scope(ctx);
        std::vector<long> ks = k_opt ? std::vector<long>{k_opt} : std::vector<long>{12, 16};
        long L = quick ? 3000 : 10000;
        long top = quick ? 2 : 3;
        for (long k : ks)
            for (long m = 1; m <= top; ++m)
                for (long n = m; n <= top; ++n)
                    emit(petersson_residual(ctx, m, n, k, L, cache_dir), pow(Real(10), -9));
    }
    if (suite == "estermann" || suite == "all") {
        PrecisionContext ctx(30);
        PrecisionScope scope(ctx);
        struct P { double sr, si; long v, l; double ar, ai; };
        std::vector<P> pts = {{2.3, 0.7, 2, 5, -3, 0},
                              {1.5, 2.0, 3, 7, -1.0 / 3, 0},
                              {1.8, -0.4, 1, 1, 0.25, 0},
                              {2.6, 1.1, 5, 12, 0.5, -0.5}};
        if (quick) pts.resize(2);
        for (auto& q : pts)
            emit(estermann_fe_residual(ctx, Complex{Real(q.sr), Real(q.si)}, q.v, q.l,
                                       Complex{Real(q.ar), Real(q.ai)}),
                 pow(Real(10), -16));
    }
    if (suite == "ramanujan" || suite == "all") {
        PrecisionContext ctx(30);
        PrecisionScope scope(ctx);
        emit(ramanujan_residual(ctx, Complex(3), 6, quick ? 2000 : 10000), pow(Real(10), -8));
        emit(ramanujan_residual(ctx, Complex(2), 12, quick ? 2000 : 10000), pow(Real(10), -5));
    }
    if (suite == "mellin" || suite == "all") {
        PrecisionContext ctx(25);
        PrecisionScope scope(ctx);
        emit(mellin_bessel_residual(ctx, Complex(1), Complex(3), Complex(1), Real(5), Real(0.5)),
             pow(Real(10), -10));
        emit(mellin_2f1_residual(ctx, Complex(1), Complex(3), Complex(1), Complex(1), Complex(2),
                                 Real(0.7)),
             pow(Real(10), -10));
        if (!quick)
            emit(mellin_bessel_residual(ctx, Complex(3), Complex(5), Complex(2), Real(12), Real(1)),
                 pow(Real(10), -10));
    }
    if (suite == "kernel" || suite == "all") {
        PrecisionContext ctx(50);
        PrecisionScope scope(ctx);
        PrecisionContext ctx2(100);
        long samples = quick ? 6 : 20;
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        auto next = [&]() {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            return (state >> 11) * 0x1.0p-53;
        };
        bool pass = true;
        for (long i = 0; i < samples; ++i) {
            Complex z{Real(next() * 8 - 3 + 0.1234), Real(next() * 8 - 4)};
            Complex g = gamma(ctx, z);
            pass = pass && (abs(gamma(ctx, z + 1) - z * g) < ctx.error_target() * (abs(z * g) + 1));
            Complex zz{Real(next() * 10 - 4 + 0.07), Real(next() * 16 - 8)};
            Complex lo = riemann_zeta(ctx, zz), hi = riemann_zeta(ctx2, zz);
            pass = pass && (abs(lo - hi) < ctx.error_target() * (abs(hi) + 1));
        }
        CutPair cp = hyp2f1_cut_pair(ctx, Complex(3), Complex(5), Complex(12), Real(2));
        pass = pass && (abs(cp.below - conj(cp.above)) < ctx.error_target() * abs(cp.above));
        json j;
        j["check"] = "kernel_invariants";
        j["inputs"] = std::string("samples=") + std::to_string(samples);
        j["pass"] = pass;
        std::cout << j.dump() << "\n";
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision verification of divisor-convolution identities"};
    app.set_config("--config", "", "key=value configuration file");

    unsigned digits = 50;
    if (const char* env = std::getenv("HECKECONV_PREC")) digits = std::atoi(env);
    std::string cache_dir, format = "json";
    bool timings = false;
    app.add_option("--prec", digits, "working precision in decimal digits");
    app.add_option("--cache-dir", cache_dir, "coefficient-table cache directory");
    app.add_option("--format", format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timings", timings, "include timing fields in reports");

    auto* vcmd = app.add_subcommand("verify", "verify the absolutely convergent identity");
    vcmd->fallthrough();
    std::string r1s, r2s, ds, ns = "1", tol_s;
    long terms = 20000;
    bool exact_mode = false;
    vcmd->add_option("--r1", r1s, "first divisor index")->required();
    vcmd->add_option("--r2", r2s, "second divisor index")->required();
    vcmd->add_option("--d", ds, "hypergeometric shift d")->required();
    vcmd->add_option("--n", ns, "n or range lo..hi");
    vcmd->add_option("--terms", terms, "two-sided truncation of the n1 sum");
    vcmd->add_option("--tol", tol_s, "pass tolerance (absolute)");
    vcmd->add_flag("--exact", exact_mode, "exact rational verification (integer parameters)");

    auto* rcmd = app.add_subcommand("regularize", "regularized divergent sums (theorem B)");
    rcmd->fallthrough();
    std::string case_id, rr1, rr2, rd, rns = "1";
    rcmd->add_option("--case", case_id, "registry case id (eq1.19, eq1.23, ...)");
    rcmd->add_option("--r1", rr1, "odd integer r1");
    rcmd->add_option("--r2", rr2, "odd integer r2");
    rcmd->add_option("--d", rd, "negative integer d");
    rcmd->add_option("--n", rns, "n or range lo..hi");

    auto* scmd = app.add_subcommand("selftest", "oracle suites and kernel invariants");
    scmd->fallthrough();
    std::string suite;
    long k_opt = 0;
    bool quick = false;
    scmd->add_option("--suite", suite, "petersson | estermann | ramanujan | mellin | kernel | all");
    scmd->add_option("--k", k_opt, "weight for the petersson suite");
    scmd->add_flag("--quick", quick, "reduced sample counts");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PrecisionContext ctx(digits);
        OutputOptions oo{format, timings};
        if (vcmd->parsed())
            return run_verify(ctx, oo, r1s, r2s, ds, ns, terms, exact_mode, tol_s, cache_dir);
        if (rcmd->parsed()) {
            if (case_id.empty() && (rr1.empty() || rr2.empty() || rd.empty())) {
                std::cerr << "regularize: need --case or all of --r1/--r2/--d\n";
                return 2;
            }
            return run_regularize(ctx, oo, case_id, rr1, rr2, rd, rns, cache_dir);
        }
        if (scmd->parsed()) return run_selftest(ctx, oo, suite, k_opt, quick, cache_dir);
    } catch (const regime_error& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownPrintedCase& e) {
        std::cerr << "unknown case: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
