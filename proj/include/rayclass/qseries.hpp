#ifndef RAYCLASS_QSERIES_HPP
#define RAYCLASS_QSERIES_HPP

#include "rayclass/numerics.hpp"

#include <gmpxx.h>

#include <string>

namespace rayclass {

/*
 * Index r = (num1/N, num2/N) of a Siegel function, Klein form or Fricke
 * function of level N. The numerators are kept as given; canonical() moves
 * them into [0, N).
 */
struct IndexPair {
    long num1 = 0;
    long num2 = 0;
    long level = 1;

    IndexPair() = default;
    IndexPair(long n1, long n2, long N);

    /// r in Z^2, i.e. both numerators divisible by the level.
    bool is_integral() const;
    IndexPair canonical() const;
    IndexPair negated() const { return IndexPair(-num1, -num2, level); }
    IndexPair doubled() const { return IndexPair(2 * num1, 2 * num2, level); }

    bool operator==(const IndexPair& rhs) const = default;
    std::string to_string() const;
};

/// tau with im(tau) > 0.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(Complex tau);
    const Complex& tau() const { return tau_; }

private:
    Complex tau_;
};

/// g_original = sign * e^{2 pi i phase} * g_canonical
struct ReducedIndex {
    IndexPair canonical;
    Phase phase;
    int sign = 1;
};

/// e^{2 pi i tau x}, the fixed branch of q^x.
Complex q_power(const HalfPlanePoint& tau, const Real& x);
Complex q_power(const HalfPlanePoint& tau, long num, long den, const PrecisionContext& ctx);

Complex eta(const HalfPlanePoint& tau, const PrecisionContext& ctx);
Complex g2(const HalfPlanePoint& tau, const PrecisionContext& ctx);
Complex g3(const HalfPlanePoint& tau, const PrecisionContext& ctx);
Complex delta(const HalfPlanePoint& tau, const PrecisionContext& ctx);
Complex j(const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// g2, g3, Delta and eta at one point, for callers that need several of them.
struct LatticeInvariants {
    Complex g2;
    Complex g3;
    Complex delta;
    Complex eta;
    Complex j() const;
};
LatticeInvariants lattice_invariants(const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// Weierstrass p(r1 tau + r2; [tau, 1]) from its q-expansion.
Complex wp(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// -(2^7 3^5 g2 g3 / Delta) p(r1 tau + r2)
Complex fricke(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

ReducedIndex reduce_index(const IndexPair& r);

/// Siegel function g_r(tau); any representative of r is accepted.
Complex siegel(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// Klein form k_r = g_r / eta^2.
Complex klein(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// ord_q g_r = B2(<r1>)/2 with B2(X) = X^2 - X + 1/6.
mpq_class siegel_order(const IndexPair& r);

/// y_r = g_{2r} / g_r^4, exactly zero when 2r is integral.
Complex y_fn(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

enum class WeberBranch { Generic, J1728, J0 };

struct WeberValue {
    Complex value;
    WeberBranch branch = WeberBranch::Generic;
};

/// Weber function h at the point r1 tau + r2 of C/[tau,1].
WeberValue weber_h(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

namespace detail {

/// Number of terms after which |q|^(n + offset) * n^degree stays below the tail bound.
long series_terms(const HalfPlanePoint& tau, double offset, int degree, const PrecisionContext& ctx);

/// Product formula evaluated literally at r, for -1 < r1 < 1 and any r2.
/// Used to check the canonical reduction independently.
Complex siegel_product(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx);

} // namespace detail

} // namespace rayclass

#endif
