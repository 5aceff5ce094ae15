#ifndef HECKECONV_HECKECONV_HPP
#define HECKECONV_HECKECONV_HPP

// High-precision verification of hypergeometric divisor-convolution
// identities against Hecke eigenform data: special-function kernels,
// exact arithmetic, the convergent and regularized identities, and the
// independent trace-formula / Estermann / Mellin validators.

#include "heckeconv/context.hpp"
#include "heckeconv/complex.hpp"
#include "heckeconv/rational.hpp"
#include "heckeconv/gamma.hpp"
#include "heckeconv/zeta.hpp"
#include "heckeconv/incgamma.hpp"
#include "heckeconv/bessel.hpp"
#include "heckeconv/hyp2f1.hpp"
#include "heckeconv/jacobi.hpp"
#include "heckeconv/elliptic.hpp"
#include "heckeconv/arith.hpp"
#include "heckeconv/exact.hpp"
#include "heckeconv/eigenform.hpp"
#include "heckeconv/lfunction.hpp"
#include "heckeconv/petersson.hpp"
#include "heckeconv/identity.hpp"
#include "heckeconv/exact_identity.hpp"
#include "heckeconv/thmb.hpp"
#include "heckeconv/printed.hpp"
#include "heckeconv/oracle.hpp"
#include "heckeconv/quadrature.hpp"

#endif
