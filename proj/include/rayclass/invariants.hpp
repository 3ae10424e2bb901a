#ifndef RAYCLASS_INVARIANTS_HPP
#define RAYCLASS_INVARIANTS_HPP

#include "rayclass/class_forms.hpp"
#include "rayclass/numerics.hpp"
#include "rayclass/qseries.hpp"
#include "rayclass/reciprocity.hpp"

#include <utility>
#include <vector>

namespace rayclass {

/// Exponents m(r) attached to indices of one level N.
struct ExponentFamily {
    long level = 1;
    std::vector<std::pair<IndexPair, long>> pairs;
};

/// Exact test of the quadratic relation modulo N together with
/// 12 | gcd(12, N) * sum m(r).
bool quadratic_relation_check(const ExponentFamily& fam);

/// 12N / gcd(6, N): exponents of conjugate values must be multiples of this.
long required_exponent_multiple(long N);

/// y_{(0,1/N)}(theta_K)^e. Needs N >= 3, e != 0 and d_K <= -7.
Complex singular_y(const CMField& field, long N, long e, const PrecisionContext& ctx);

struct OrbitReport {
    std::vector<GaloisLabel> labels;
    std::vector<Complex> values;
    long exponent = 0;
    CMField field;
    long level = 0;
};

/// All conjugates g_{(0,2/N)M}(theta_Q)^e / g_{(0,1/N)M}(theta_Q)^{4e}, M = alpha u_Q.
/// Throws ExponentError unless e is a multiple of 12N/gcd(6,N).
OrbitReport conjugate_orbit(const CMField& field, long N, long e, const PrecisionContext& ctx);

/*
 * Minimal polynomial of x = p^m * y^e over K.
 *
 * For composite N with two or more prime factors y is a unit and m = 0.
 * For N = p^k the singular value may have p in its denominator; m is the
 * least exponent in [0, 4|e|k] for which the expanded coefficients are
 * integers, so the output is the polynomial of an algebraic integer.
 */
struct MinPolyReport {
    IntPolynomial poly;
    long scale_prime = 1;
    long scale_power = 0;
    Real max_imag;
    Real max_distance;
    std::size_t degree = 0;
};

MinPolyReport min_poly_report(const CMField& field, long N, long e, const PrecisionContext& ctx);

/// Convenience wrapper returning only the polynomial. Needs d_K <= -19.
IntPolynomial min_poly_invariant(const CMField& field, long N, long e, const PrecisionContext& ctx);

/// |W_{N,theta}/{+-1}| * h(d_K)
long field_degree(const CMField& field, long N);

struct InequalityWitness {
    long s = 0;
    long t = 0;
    ReducedForm form;
    Real ratio;
};

struct InequalityReport {
    Real max_ratio;
    Real threshold;
    std::vector<InequalityWitness> witnesses; ///< sorted by decreasing ratio
    bool passed = false;
};

/// Non-principal forms against the reference value at theta_K, threshold 0.996.
/// Throws HypothesisError unless d_K <= -20 and N >= 3.
InequalityReport verify_inequality1(const CMField& field, long N, const PrecisionContext& ctx);

/// Other indices at theta_K, threshold 0.614. Needs d_K <= -11 and N >= 3.
InequalityReport verify_inequality2(const CMField& field, long N, const PrecisionContext& ctx);

/// Least s >= 1 with s >= (gcd(4,N)/4) log_{1/0.996} [K_(N):K].
long normal_basis_exponent(const CMField& field, long N);

/*
 * K = Q(sqrt(-3)), theta = (-1 + sqrt(-3))/2. Both signs of
 *   s * y^2 / (3 sqrt(-3)) = 4 h(phi(1/N)) + 1/27
 * are tried; `sign` is the one that closes, or 0 when both do (N = 2,
 * where y vanishes).
 */
struct ExceptionalReport {
    long level = 0;
    Complex y_squared;
    Complex weber;
    int sign = 0;
    Real residual;       ///< for the chosen sign (either one when sign is 0)
    Real other_residual; ///< for the opposite sign
    Real g3_squared_over_delta_residual; ///< |g3^2/Delta + 1/27|
    Real j_abs;
};

ExceptionalReport exceptional_invariant(long N, const PrecisionContext& ctx);

} // namespace rayclass

#endif
