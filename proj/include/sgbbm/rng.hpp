#pragma once
#include <cmath>
#include <cstdint>

#include "sgbbm/errors.hpp"

// Counter-based random numbers: Philox4x64-10 blocks keyed by the root seed,
// with one N(0,1) variate per (seed, sample, mode, step) coordinate. Counter
// coordinates, not generator state, define every draw, so any worker can
// produce any draw independently and reruns are bit-identical by
// construction on any IEEE-754 double platform.
namespace sgbbm::rng {

struct Counter {
    std::uint64_t w[4];
};

struct Key {
    std::uint64_t k[2];
};

namespace detail {

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

}  // namespace detail

inline Counter philox4x64(Counter c, Key k) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        detail::mulhilo(detail::kMul0, c.w[0], hi0, lo0);
        detail::mulhilo(detail::kMul1, c.w[2], hi1, lo1);
        c = Counter{{hi1 ^ c.w[1] ^ k.k[0], lo1, hi0 ^ c.w[3] ^ k.k[1], lo0}};
        k.k[0] += detail::kWeyl0;
        k.k[1] += detail::kWeyl1;
    }
    return c;
}

// Uniform in the open interval (0,1): 52 high bits plus a half-step offset.
// The extremes are exactly 2^-53 and 1 - 2^-53, so 0 and 1 are unreachable
// even after rounding and the map is exactly symmetric about 1/2.
inline double u01(std::uint64_t x) {
    return static_cast<double>(x >> 12) * 0x1.0p-52 + 0x1.0p-53;
}

// Wichura's PPND16 rational approximation to the standard normal quantile,
// accurate to full double precision on (0,1).
inline double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("inverse_normal_cdf: p must lie in (0,1)");
    const double q = p - 0.5;
    if (q >= -0.425 && q <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            q * (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                      6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                    1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                  1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
        const double den =
            (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                  3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
              4.2313330701600911252e+1) * r + 1.0);
        return num / den;
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
        val = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        val = num / den;
    }
    return (q < 0.0) ? -val : val;
}

// The draw coordinate system: word 0 of the block at counter
// {sample, mode, step, stream} under key {seed, 0}.
inline double normal_draw(std::uint64_t seed, std::uint64_t sample,
                          std::uint64_t mode, std::uint64_t step,
                          std::uint64_t stream = 0) {
    const Counter c{{sample, mode, step, stream}};
    const Key k{{seed, 0}};
    return inverse_normal_cdf(u01(philox4x64(c, k).w[0]));
}

}  // namespace sgbbm::rng
