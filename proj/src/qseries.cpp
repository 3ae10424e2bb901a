#include "rayclass/qseries.hpp"

#include "rayclass/errors.hpp"

#include <cmath>
#include <numbers>

namespace rayclass {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

Complex one(const PrecisionContext& ctx) { return ctx.complex(1); }

// q = e^{2 pi i tau}
Complex nome(const HalfPlanePoint& tau, const PrecisionContext& ctx) { return q_power(tau, ctx.real(1)); }

// prod_{n>=1} (1 - q^n)
Complex euler_product(const HalfPlanePoint& tau, const Complex& q, const PrecisionContext& ctx)
{
    long terms = detail::series_terms(tau, 0.0, 0, ctx);
    Complex prod = one(ctx);
    Complex qn = q;
    for (long n = 1; n <= terms; ++n) {
        prod *= (1 - qn);
        qn *= q;
    }
    return prod;
}

// sum_{n>=1} sigma_k(n) q^n
Complex divisor_series(const HalfPlanePoint& tau, const Complex& q, unsigned k, const PrecisionContext& ctx)
{
    long terms = detail::series_terms(tau, 0.0, static_cast<int>(k) + 1, ctx);
    std::vector<mpz_class> sigma(static_cast<std::size_t>(terms) + 1, 0);
    for (long d = 1; d <= terms; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (long m = d; m <= terms; m += d)
            sigma[static_cast<std::size_t>(m)] += dk;
    }
    Complex sum(ctx.bits());
    Complex qn = q;
    for (long n = 1; n <= terms; ++n) {
        sum += qn * Real(sigma[static_cast<std::size_t>(n)], ctx.bits());
        qn *= q;
    }
    return sum;
}

Real two_pi_pow(int k, const PrecisionContext& ctx) { return pow(ctx.pi() * 2, k); }

// Siegel product with r1 = num1/N in (-1, 1), evaluated as written:
//   -q^{B2(r1)/2} e^{pi i r2 (r1 - 1)} (1 - q_z) prod (1 - q^n q_z)(1 - q^n / q_z)
Complex siegel_raw(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    const long a = r.num1, b = r.num2, N = r.level;
    // B2(a/N)/2 = (6a^2 - 6aN + N^2) / (12 N^2)
    Complex lead = q_power(tau, 6 * a * a - 6 * a * N + N * N, 12 * N * N, ctx);
    lead *= Phase(b * (a - N), 2 * N * N).unit(ctx.bits());

    Complex qz = q_power(tau, a, N, ctx) * Phase(b, N).unit(ctx.bits());
    Complex qz_inv = inverse(qz);
    Complex q = nome(tau, ctx);

    double r1 = static_cast<double>(a) / static_cast<double>(N);
    long terms = detail::series_terms(tau, -std::abs(r1), 0, ctx);
    Complex prod = 1 - qz;
    Complex qn = q;
    for (long n = 1; n <= terms; ++n) {
        prod *= (1 - qn * qz) * (1 - qn * qz_inv);
        qn *= q;
    }
    return -(lead * prod);
}

} // namespace

// ---------------------------------------------------------------- IndexPair

IndexPair::IndexPair(long n1, long n2, long N) : num1(n1), num2(n2), level(N)
{
    if (N <= 0)
        throw DomainError("index level must be positive, got " + std::to_string(N));
}

bool IndexPair::is_integral() const { return num1 % level == 0 && num2 % level == 0; }

IndexPair IndexPair::canonical() const { return IndexPair(mod(num1, level), mod(num2, level), level); }

std::string IndexPair::to_string() const
{
    return "(" + std::to_string(num1) + "/" + std::to_string(level) + ", " + std::to_string(num2) + "/" +
           std::to_string(level) + ")";
}

HalfPlanePoint::HalfPlanePoint(Complex tau) : tau_(std::move(tau))
{
    if (!(tau_.im() > 0))
        throw DomainError("tau must lie in the upper half-plane");
}

// -------------------------------------------------------------- primitives

long detail::series_terms(const HalfPlanePoint& tau, double offset, int degree, const PrecisionContext& ctx)
{
    const double log_q = -2.0 * std::numbers::pi * tau.tau().im().to_double();
    const double target = -ctx.tail_digits() * std::numbers::ln10 - 2.0;
    constexpr long kMaxTerms = 50'000'000;
    for (long n = 1; n < kMaxTerms; ++n) {
        double logterm = degree * std::log(static_cast<double>(n)) + (n + offset) * log_q;
        bool decreasing = degree / static_cast<double>(n) + log_q < 0;
        if (decreasing && logterm < target)
            return n;
    }
    throw DomainError("im(tau) too small for q-series evaluation");
}

Complex q_power(const HalfPlanePoint& tau, const Real& x)
{
    // 2 pi i tau x = 2 pi x (i re - im)
    Real scale = Real::pi(x.prec()) * 2 * x;
    Complex z(-(scale * tau.tau().im()), scale * tau.tau().re());
    return exp(z);
}

Complex q_power(const HalfPlanePoint& tau, long num, long den, const PrecisionContext& ctx)
{
    return q_power(tau, ctx.rational(num, den));
}

Complex eta(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    Complex q = nome(tau, ctx);
    Complex value = q_power(tau, 1, 24, ctx) * euler_product(tau, q, ctx);
    value *= Phase(1, 8).unit(ctx.bits());
    return value * sqrt(ctx.pi() * 2);
}

Complex g2(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    Complex q = nome(tau, ctx);
    Complex series = divisor_series(tau, q, 3, ctx) * 240 + 1;
    return series * (two_pi_pow(4, ctx) / 12);
}

Complex g3(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    Complex q = nome(tau, ctx);
    Complex series = 1 - divisor_series(tau, q, 5, ctx) * 504;
    return series * (two_pi_pow(6, ctx) / 216);
}

Complex delta(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    // (2 pi i)^12 = (2 pi)^12
    Complex q = nome(tau, ctx);
    return q * pow(euler_product(tau, q, ctx), 24) * two_pi_pow(12, ctx);
}

Complex j(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    return pow(g2(tau, ctx), 3) * 1728 / delta(tau, ctx);
}

Complex LatticeInvariants::j() const { return pow(g2, 3) * 1728 / delta; }

LatticeInvariants lattice_invariants(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    Complex q = nome(tau, ctx);
    Complex prod = euler_product(tau, q, ctx);
    Complex eta_value = q_power(tau, 1, 24, ctx) * prod * Phase(1, 8).unit(ctx.bits()) * sqrt(ctx.pi() * 2);
    return LatticeInvariants{
        (divisor_series(tau, q, 3, ctx) * 240 + 1) * (two_pi_pow(4, ctx) / 12),
        (1 - divisor_series(tau, q, 5, ctx) * 504) * (two_pi_pow(6, ctx) / 216),
        q * pow(prod, 24) * two_pi_pow(12, ctx),
        std::move(eta_value),
    };
}

// ------------------------------------------------------------- Weierstrass

Complex wp(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    if (r.is_integral())
        throw DomainError("p has a pole at the lattice point " + r.to_string());
    // p is periodic in both z -> z + 1 and z -> z + tau
    IndexPair c = r.canonical();
    Complex q = nome(tau, ctx);
    Complex qz = q_power(tau, c.num1, c.level, ctx) * Phase(c.num2, c.level).unit(ctx.bits());
    Complex qz_inv = inverse(qz);

    // The inner sum over n of the double series is sum_n n x^n = x / (1 - x)^2.
    auto lambert = [](const Complex& x) { return x / pow(1 - x, 2); };

    Complex sum = lambert(qz) + ctx.rational(1, 12);
    double r1 = static_cast<double>(c.num1) / static_cast<double>(c.level);
    long terms = detail::series_terms(tau, -r1, 0, ctx);
    Complex qm = q;
    for (long m = 1; m <= terms; ++m) {
        sum += lambert(qm * qz) + lambert(qm * qz_inv) - lambert(qm) * 2;
        qm *= q;
    }
    // (2 pi i)^2 = -4 pi^2
    return sum * (pow(ctx.pi(), 2) * -4);
}

Complex fricke(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    LatticeInvariants inv = lattice_invariants(tau, ctx);
    return inv.g2 * inv.g3 / inv.delta * wp(r, tau, ctx) * -(128L * 243L);
}

// ----------------------------------------------------------------- Siegel

ReducedIndex reduce_index(const IndexPair& r)
{
    if (r.is_integral())
        throw DomainError("Siegel index " + r.to_string() + " lies in Z^2");
    const long N = r.level;
    const long s1 = floor_div(r.num1, N);
    const long s2 = floor_div(r.num2, N);
    const long c1 = r.num1 - s1 * N;
    const long c2 = r.num2 - s2 * N;
    // g_{c+s} = (-1)^{s1 s2 + s1 + s2} e^{-pi i (s1 c2 - s2 c1)/N} g_c
    ReducedIndex out;
    out.canonical = IndexPair(c1, c2, N);
    out.sign = mod(s1 * s2 + s1 + s2, 2) == 0 ? 1 : -1;
    out.phase = Phase(-(s1 * c2 - s2 * c1), 2 * N);
    return out;
}

Complex siegel(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ReducedIndex red = reduce_index(r);
    Complex value = siegel_raw(red.canonical, tau, ctx);
    if (!red.phase.is_zero())
        value *= red.phase.unit(ctx.bits());
    return red.sign < 0 ? -value : value;
}

Complex klein(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    return siegel(r, tau, ctx) / pow(eta(tau, ctx), 2);
}

mpq_class siegel_order(const IndexPair& r)
{
    const long N = r.level;
    const long a = mod(r.num1, N);
    mpq_class order(6 * a * a - 6 * a * N + N * N, 12 * N * N);
    order.canonicalize();
    return order;
}

Complex y_fn(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    IndexPair twice = r.doubled();
    if (twice.is_integral())
        return Complex(ctx.bits());
    ReducedIndex top = reduce_index(twice);
    ReducedIndex bottom = reduce_index(r);
    Complex value = siegel_raw(top.canonical, tau, ctx) / pow(siegel_raw(bottom.canonical, tau, ctx), 4);
    // sign^4 of the denominator is 1
    Phase phase = top.phase - bottom.phase * 4;
    if (!phase.is_zero())
        value *= phase.unit(ctx.bits());
    return top.sign < 0 ? -value : value;
}

WeberValue weber_h(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    LatticeInvariants inv = lattice_invariants(tau, ctx);
    Complex jv = inv.j();
    Complex p = wp(r, tau, ctx);
    Real branch_tol = Real::pow10(-(ctx.digits() / 2), ctx.bits());
    if (abs(jv) < branch_tol)
        return {inv.g3 / inv.delta * pow(p, 3), WeberBranch::J0};
    if (abs(jv - ctx.real(1728)) < branch_tol)
        return {pow(inv.g2, 2) / inv.delta * pow(p, 2), WeberBranch::J1728};
    return {inv.g2 * inv.g3 / inv.delta * p, WeberBranch::Generic};
}

Complex detail::siegel_product(const IndexPair& r, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    if (std::abs(r.num1) >= r.level)
        throw DomainError("literal Siegel product needs -1 < r1 < 1");
    if (r.is_integral())
        throw DomainError("Siegel index " + r.to_string() + " lies in Z^2");
    return siegel_raw(r, tau, ctx);
}

} // namespace rayclass
