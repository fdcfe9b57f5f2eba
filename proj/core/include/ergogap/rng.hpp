#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace ergogap {

// Deterministic, seedable generator used for every randomized state family.
//
// The core is SplitMix64: the seed advances by the constant 0x9E3779B97F4A7C15
// and each output is finalized with two xor-shift multiplies.  The algorithm
// is fully specified here so that streams can be reproduced outside this
// library, in any language, from the seed alone.
//
// Derived draws consume the stream in documented order:
//   next_uniform      one u64, mapped to [0, 1) with 53-bit resolution
//   next_gaussian     two uniforms u1, u2 via Box-Muller, returning
//                     sqrt(-2 ln(1 - u1)) * cos(2 pi u2)
//   next_complex_gaussian
//                     two uniforms u1, u2 via Box-Muller, real part from the
//                     cosine branch and imaginary part from the sine branch
//   next_exponential  one uniform u, returning -ln(1 - u)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1): top 53 bits scaled by 2^-53.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_gaussian() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    std::complex<double> next_complex_gaussian() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return {r * std::cos(2.0 * std::numbers::pi * u2),
                r * std::sin(2.0 * std::numbers::pi * u2)};
    }

    // Standard exponential; 1 - u is in (0, 1] so the log is always finite.
    double next_exponential() { return -std::log1p(-next_uniform()); }

private:
    std::uint64_t state_;
};

} // namespace ergogap
