#ifndef HECKECONV_ELLIPTIC_HPP
#define HECKECONV_ELLIPTIC_HPP

#include "heckeconv/hyp2f1.hpp"

namespace heckeconv {

// complete elliptic integrals in the hypergeometric normalization used by
// the cut-average weights: K(z) = (pi/2) 2F1(1/2,1/2;1;z),
// E(z) = (pi/2) 2F1(-1/2,1/2;1;z), argument = the parameter m
inline Complex elliptic_k(const PrecisionContext& ctx, const Complex& z) {
    PrecisionScope scope(ctx);
    Real h = Real(1) / 2;
    return Complex(const_pi() / 2) * hyp2f1(ctx, Complex(h), Complex(h), Complex(1), z);
}
inline Complex elliptic_e(const PrecisionContext& ctx, const Complex& z) {
    PrecisionScope scope(ctx);
    Real h = Real(1) / 2;
    return Complex(const_pi() / 2) * hyp2f1(ctx, Complex(-h), Complex(h), Complex(1), z);
}

// boundary pairs of (K, E) across [1, oo); for x < 1 both sides coincide
// with the principal value. K has a logarithmic singularity at x = 1.
inline std::pair<CutPair, CutPair> elliptic_ke_cut(const PrecisionContext& ctx, const Real& x_in) {
    PrecisionScope scope(ctx);
    Real x = snap(x_in);
    Real h = Real(1) / 2;
    Complex half_pi(const_pi() / 2);
    if (x < 1) {
        Complex k = elliptic_k(ctx, Complex(x));
        Complex e = elliptic_e(ctx, Complex(x));
        return {CutPair{k, k}, CutPair{e, e}};
    }
    if (x == 1)
        throw pole_error("elliptic_ke_cut: K diverges logarithmically at x = 1");
    CutPair kp = hyp2f1_cut_pair(ctx, Complex(h), Complex(h), Complex(1), x);
    CutPair ep = hyp2f1_cut_pair(ctx, Complex(-h), Complex(h), Complex(1), x);
    kp.above *= half_pi; kp.below *= half_pi;
    ep.above *= half_pi; ep.below *= half_pi;
    return {kp, ep};
}

} // namespace heckeconv

#endif
