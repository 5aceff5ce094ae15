#ifndef HECKECONV_TEST_COMMON_HPP
#define HECKECONV_TEST_COMMON_HPP

#include "heckeconv/complex.hpp"
#include <cstdint>

namespace hctest {

using heckeconv::Real;
using heckeconv::Complex;

inline Real rel_err(const Complex& got, const Complex& want) {
    Real scale = heckeconv::abs(want);
    if (scale.is_zero()) return heckeconv::abs(got);
    return heckeconv::abs(got - want) / scale;
}
inline Real abs_err(const Complex& got, const Complex& want) {
    return heckeconv::abs(got - want);
}

// deterministic splitmix64 stream for reproducible "random" sample points
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform double in [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (next_u64() >> 11) * 0x1.0p-53;
    }
    long uniform_int(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
        return Complex(Real(uniform(re_lo, re_hi)), Real(uniform(im_lo, im_hi)));
    }

private:
    std::uint64_t state_;
};

inline std::string cache_dir() {
    return "heckeconv_test_cache";  // created under the build tree
}

} // namespace hctest

#endif
