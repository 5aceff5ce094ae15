#ifndef HECKECONV_CONTEXT_HPP
#define HECKECONV_CONTEXT_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace heckeconv {

namespace mp = boost::multiprecision;

using Real     = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Int      = mp::number<mp::gmp_int, mp::et_off>;

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct pole_error : std::domain_error {
    // residue of the function at the pole, as a decimal string (diagnostic)
    std::string residue;
    pole_error(const std::string& msg, std::string res = "")
        : std::domain_error(msg), residue(std::move(res)) {}
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct regime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct insufficient_table_error : std::runtime_error {
    long required_n;
    insufficient_table_error(const std::string& msg, long req)
        : std::runtime_error(msg), required_n(req) {}
};
struct unsupported_weight_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Working-precision context. One context governs a run; every mpcore entry
// point installs ctx.working_digits() as the mpfr default before computing.
// Internal head-room beyond the requested digits absorbs routine rounding;
// functions that cancel harder elevate locally.
class PrecisionContext {
public:
    explicit PrecisionContext(unsigned digits = 50, unsigned long max_series_terms = 2000000)
        : digits_(digits), max_series_terms_(max_series_terms) {
        if (digits_ < 15) throw domain_error("PrecisionContext: digits must be >= 15");
    }

    unsigned digits() const { return digits_; }
    unsigned long max_series_terms() const { return max_series_terms_; }
    unsigned working_digits() const { return digits_ + guard_digits; }

    PrecisionContext with_digits(unsigned d) const {
        return PrecisionContext(d, max_series_terms_);
    }

    // relative error every returned value is held to: 10^(6-digits)
    Real error_target() const {
        return pow(Real(10), -static_cast<int>(digits_) + 6);
    }
    // convergence cutoff for internal series at working precision
    Real series_epsilon() const {
        return pow(Real(10), -static_cast<int>(working_digits()) + 2);
    }

    static constexpr unsigned guard_digits = 15;

private:
    unsigned digits_;
    unsigned long max_series_terms_;
};

// Installs the context's working precision as the mpfr default for the
// current scope and restores the previous default on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionContext& ctx)
        : saved_(Real::default_precision()) {
        Real::default_precision(ctx.working_digits());
    }
    explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

// Re-round x at the current default precision. mpfr variables carry their
// own precision and (in this boost version) propagate it through arithmetic,
// so every public entry point snaps its scalar inputs once.
inline Real snap(const Real& x) {
    Real y;
    mpfr_set(y.backend().data(), x.backend().data(), MPFR_RNDN);
    return y;
}

inline Real to_real(const Rational& q) {
    Real num, den;
    mpfr_set_z(num.backend().data(), numerator(q).backend().data(), MPFR_RNDN);
    mpfr_set_z(den.backend().data(), denominator(q).backend().data(), MPFR_RNDN);
    return num / den;
}
inline Real to_real(const Int& n) {
    Real y;
    mpfr_set_z(y.backend().data(), n.backend().data(), MPFR_RNDN);
    return y;
}

} // namespace heckeconv

#endif
