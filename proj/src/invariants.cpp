#include "rayclass/invariants.hpp"

#include "rayclass/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rayclass {

namespace {

void require_level(long N)
{
    if (N < 3)
        throw UnsupportedError("level must be at least 3, got " + std::to_string(N));
}

void require_evaluable_field(const CMField& field)
{
    if (field.discriminant > -7)
        throw UnsupportedError("evaluation at theta_K needs d_K <= -7, got " + std::to_string(field.discriminant));
}

void require_hypothesis(const CMField& field, long N, long max_disc, const char* what)
{
    if (field.discriminant > max_disc)
        throw HypothesisError(std::string(what) + " needs d_K <= " + std::to_string(max_disc) + ", got " +
                              std::to_string(field.discriminant));
    if (N < 3)
        throw HypothesisError(std::string(what) + " needs N >= 3, got " + std::to_string(N));
}

void require_exact_exponent(long N, long e)
{
    const long E = required_exponent_multiple(N);
    if (e == 0 || e % E != 0)
        throw ExponentError("exponent " + std::to_string(e) + " is not a nonzero multiple of " + std::to_string(E) +
                                " = 12N/gcd(6,N)",
                            E);
}

// Returns p when N = p^k (k >= 1), otherwise 0; k is written to `power`.
long prime_power_base(long N, long& power)
{
    long p = 0;
    for (long f = 2; f * f <= N; ++f) {
        if (N % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0)
        p = N;
    power = 0;
    while (N % p == 0) {
        N /= p;
        ++power;
    }
    return N == 1 ? p : 0;
}

// |g_{2r}(tau) / g_r(tau)^4|, zero when 2r is integral.
Real abs_y(long s, long t, long N, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    IndexPair r(s, t, N);
    if (r.doubled().is_integral())
        return ctx.real(0);
    return abs(siegel(r.doubled(), tau, ctx)) / pow(abs(siegel(r, tau, ctx)), 4);
}

InequalityReport finish_report(std::vector<InequalityWitness> witnesses, Real threshold, const PrecisionContext& ctx)
{
    std::stable_sort(witnesses.begin(), witnesses.end(),
                     [](const InequalityWitness& x, const InequalityWitness& y) { return x.ratio > y.ratio; });
    InequalityReport report;
    report.max_ratio = witnesses.empty() ? ctx.real(0) : witnesses.front().ratio;
    report.threshold = std::move(threshold);
    report.passed = report.max_ratio < report.threshold;
    report.witnesses = std::move(witnesses);
    return report;
}

} // namespace

bool quadratic_relation_check(const ExponentFamily& fam)
{
    const long N = fam.level;
    mpz_class s11 = 0, s22 = 0, s12 = 0, total = 0;
    for (const auto& [r, m] : fam.pairs) {
        if (r.level != N)
            return false;
        mpz_class a = r.num1, b = r.num2, mm = m;
        s11 += mm * a * a;
        s22 += mm * b * b;
        s12 += mm * a * b;
        total += mm;
    }
    const mpz_class sq_mod = std::gcd(2L, N) * N;
    auto divides = [](const mpz_class& d, const mpz_class& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; };
    return divides(sq_mod, s11) && divides(sq_mod, s22) && divides(mpz_class(N), s12) &&
           divides(mpz_class(12), std::gcd(12L, N) * total);
}

long required_exponent_multiple(long N)
{
    if (N <= 0)
        throw DomainError("level must be positive");
    return 12 * N / std::gcd(6L, N);
}

Complex singular_y(const CMField& field, long N, long e, const PrecisionContext& ctx)
{
    require_level(N);
    require_evaluable_field(field);
    if (e == 0)
        throw DomainError("exponent must be nonzero");
    return pow(y_fn(IndexPair(0, 1, N), HalfPlanePoint(field.theta), ctx), e);
}

OrbitReport conjugate_orbit(const CMField& field, long N, long e, const PrecisionContext& ctx)
{
    require_level(N);
    require_evaluable_field(field);
    require_exact_exponent(N, e);
    OrbitReport report;
    report.labels = galois_labels(N, field, ctx);
    report.exponent = e;
    report.field = field;
    report.level = N;
    const auto& labels = report.labels;
    report.values = parallel_map<Complex>(labels.size(), [&](std::size_t i) {
        const MatModN M = labels[i].composite();
        const HalfPlanePoint tau(labels[i].theta_eval);
        Complex top = siegel(act_on_index(IndexPair(0, 2, N), M), tau, ctx);
        Complex bottom = siegel(act_on_index(IndexPair(0, 1, N), M), tau, ctx);
        return pow(top / pow(bottom, 4), e);
    });
    return report;
}

MinPolyReport min_poly_report(const CMField& field, long N, long e, const PrecisionContext& ctx)
{
    require_hypothesis(field, N, -19, "minimal polynomial");
    OrbitReport orbit = conjugate_orbit(field, N, e, ctx);
    std::vector<Complex> coeffs = poly_from_roots(orbit.values, ctx);
    const std::size_t n = orbit.values.size();
    const Real tol = default_integrality_tolerance(ctx);

    long k = 0;
    const long p = prime_power_base(N, k);
    const long max_power = p == 0 ? 0 : 4 * std::abs(e) * k;

    MinPolyReport report;
    report.degree = n;
    report.scale_prime = p == 0 ? 1 : p;
    IntegralityResidual first_residual;
    for (long m = 0; m <= max_power; ++m) {
        // coefficient of X^i picks up p^{m (n - i)}
        std::vector<Complex> scaled = coeffs;
        if (m > 0) {
            mpz_class unit, step = 1;
            mpz_ui_pow_ui(unit.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
            for (std::size_t i = n + 1; i-- > 0;) {
                scaled[i] = coeffs[i] * Real(step, ctx.bits());
                step *= unit;
            }
        }
        IntegralityResidual res = integrality_residual(scaled);
        if (m == 0)
            first_residual = res;
        if (res.max_imag < tol && res.max_distance < tol) {
            report.poly = round_to_integer_poly(scaled, tol);
            report.scale_power = m;
            report.max_imag = res.max_imag;
            report.max_distance = res.max_distance;
            return report;
        }
    }
    throw IntegralityError("conjugate polynomial of degree " + std::to_string(n) +
                               " is not integral; increase the precision",
                           first_residual.worst_degree, max(first_residual.max_imag, first_residual.max_distance).to_double());
}

IntPolynomial min_poly_invariant(const CMField& field, long N, long e, const PrecisionContext& ctx)
{
    return min_poly_report(field, N, e, ctx).poly;
}

long field_degree(const CMField& field, long N)
{
    return static_cast<long>(w_group(N, field).size() * reduced_forms(field.discriminant).size());
}

InequalityReport verify_inequality1(const CMField& field, long N, const PrecisionContext& ctx)
{
    require_hypothesis(field, N, -20, "first inequality lemma");
    const Real reference = abs_y(0, 1, N, HalfPlanePoint(field.theta), ctx);
    std::vector<InequalityWitness> witnesses;
    for (const ReducedForm& Q : reduced_forms(field.discriminant)) {
        if (Q.a < 2)
            continue;
        const HalfPlanePoint tau(theta_Q(Q, ctx));
        for (long s = 0; 2 * s <= N; ++s)
            for (long t = 0; t < N; ++t)
                if (s != 0 || t != 0)
                    witnesses.push_back({s, t, Q, abs_y(s, t, N, tau, ctx) / reference});
    }
    return finish_report(std::move(witnesses), Real::rational(996, 1000, ctx.bits()), ctx);
}

InequalityReport verify_inequality2(const CMField& field, long N, const PrecisionContext& ctx)
{
    require_hypothesis(field, N, -11, "second inequality lemma");
    const HalfPlanePoint tau(field.theta);
    const Real reference = abs_y(0, 1, N, tau, ctx);
    const ReducedForm principal = unit_form(field.discriminant);
    std::vector<InequalityWitness> witnesses;
    for (long s = 0; 2 * s <= N; ++s) {
        for (long t = 0; t < N; ++t) {
            if (s == 0 && (t == 0 || t == 1 || t == N - 1))
                continue;
            witnesses.push_back({s, t, principal, abs_y(s, t, N, tau, ctx) / reference});
        }
    }
    return finish_report(std::move(witnesses), Real::rational(614, 1000, ctx.bits()), ctx);
}

long normal_basis_exponent(const CMField& field, long N)
{
    require_hypothesis(field, N, -19, "normal basis bound");
    const long degree = field_degree(field, N);
    const mpfr_prec_t bits = 256;
    Real bound = Real(std::gcd(4L, N), bits) / 4 * log(Real(degree, bits)) / -log(Real::rational(996, 1000, bits));
    mpz_class s = bound.round();
    if (Real(s, bits) < bound)
        s += 1;
    return std::max(1L, s.get_si());
}

ExceptionalReport exceptional_invariant(long N, const PrecisionContext& ctx)
{
    if (N < 2)
        throw UnsupportedError("exceptional case needs N >= 2, got " + std::to_string(N));
    const Real sqrt3 = sqrt(ctx.real(3));
    const HalfPlanePoint tau(Complex(-ctx.rational(1, 2), sqrt3 / 2));
    const IndexPair r(0, 1, N);

    ExceptionalReport report;
    report.level = N;
    report.y_squared = pow(y_fn(r, tau, ctx), 2);
    WeberValue h = weber_h(r, tau, ctx);
    if (h.branch != WeberBranch::J0)
        throw ConsistencyError("j(theta) is not zero at working precision");
    report.weber = h.value;

    LatticeInvariants inv = lattice_invariants(tau, ctx);
    report.j_abs = abs(inv.j());
    report.g3_squared_over_delta_residual = abs(pow(inv.g3, 2) / inv.delta + ctx.rational(1, 27));

    // 1 / (3 sqrt(-3)) = -i / (3 sqrt 3)
    const Complex factor(ctx.real(0), ctx.real(-1) / (3 * sqrt3));
    const Complex rhs = 4 * h.value + ctx.rational(1, 27);
    const Real scale = max(ctx.real(1), abs(rhs));
    const Complex lhs = factor * report.y_squared;
    Real plus = abs(lhs - rhs) / scale;
    Real minus = abs(-lhs - rhs) / scale;
    const Real tol = ctx.tolerance();
    const bool plus_ok = plus < tol;
    const bool minus_ok = minus < tol;
    if (!plus_ok && !minus_ok)
        throw ConsistencyError("exceptional identity fails for both signs at N = " + std::to_string(N) +
                               " (residuals " + plus.to_string(5) + ", " + minus.to_string(5) + ")");
    if (plus_ok && minus_ok) {
        report.sign = 0;
        report.residual = plus;
        report.other_residual = minus;
    } else if (plus_ok) {
        report.sign = 1;
        report.residual = plus;
        report.other_residual = minus;
    } else {
        report.sign = -1;
        report.residual = minus;
        report.other_residual = plus;
    }
    return report;
}

} // namespace rayclass
