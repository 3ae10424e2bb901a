#ifndef RAYCLASS_TEST_SUPPORT_HPP
#define RAYCLASS_TEST_SUPPORT_HPP

#include "rayclass/bigfloat.hpp"
#include "rayclass/numerics.hpp"

#include <cstdint>
#include <random>

namespace testing {

using rayclass::Complex;
using rayclass::PrecisionContext;
using rayclass::Real;

/// Seeded generator for the property tests; every suite starts from a fixed seed.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// Real in [lo, hi] with a random 30-digit mantissa, exact at context precision.
    Real real(double lo, double hi, const PrecisionContext& ctx)
    {
        const long scale = 1'000'000'000L;
        Real u = ctx.rational(integer(0, scale), scale) + ctx.rational(integer(0, scale), scale) / scale;
        return ctx.real(0) + Real(std::to_string(lo), ctx.bits()) + u * Real(std::to_string(hi - lo), ctx.bits());
    }

    /// tau with re in [-1/2, 1/2] and im in [im_lo, im_hi].
    Complex tau(double im_lo, double im_hi, const PrecisionContext& ctx)
    {
        return Complex(real(-0.5, 0.5, ctx), real(im_lo, im_hi, ctx));
    }

private:
    std::mt19937_64 rng_;
};

inline Real rel_err(const Complex& a, const Complex& b)
{
    Real scale = abs(b);
    if (scale < 1)
        return abs(a - b);
    return abs(a - b) / scale;
}

/// True when a and b agree to relative 10^(-exp10).
inline bool close(const Complex& a, const Complex& b, long exp10)
{
    return rel_err(a, b) < Real::pow10(-exp10, a.prec());
}

inline bool close(const Real& a, const Real& b, long exp10)
{
    return close(Complex(a), Complex(b), exp10);
}

} // namespace testing

#endif
