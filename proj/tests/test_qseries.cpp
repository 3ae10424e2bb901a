#include "rayclass/errors.hpp"
#include "rayclass/qseries.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace rayclass;
using testing::close;
using testing::Gen;

namespace {

Complex two_pi_i(const PrecisionContext& ctx) { return Complex(ctx.real(0), 2 * ctx.pi()); }

Complex zeta(long num, long den, const PrecisionContext& ctx) { return Phase(num, den).unit(ctx.bits()); }

Complex q_of(const Complex& tau, const Real& x, const PrecisionContext& ctx) { return exp(two_pi_i(ctx) * tau * x); }

// Product formula written out term by term, for any real r1 (not only the
// canonical range). Used as an independent check of siegel().
Complex siegel_oracle(long n1, long n2, long N, const Complex& tau, const PrecisionContext& ctx)
{
    const Real r1 = ctx.rational(n1, N), r2 = ctx.rational(n2, N);
    const Complex z = tau * r1 + r2;
    const Complex qz = exp(two_pi_i(ctx) * z);
    const Complex qzinv = inverse(qz);
    const Complex q = exp(two_pi_i(ctx) * tau);
    const Real b2_half = (r1 * r1 - r1 + ctx.rational(1, 6)) / 2;
    Complex value = -(q_of(tau, b2_half, ctx) * exp(Complex(ctx.real(0), ctx.pi() * r2 * (r1 - 1))) * (1 - qz));
    const Real stop = Real::pow10(-ctx.tail_digits(), ctx.bits());
    Complex qn = q;
    for (long n = 1;; ++n) {
        Complex a = qn * qz, b = qn * qzinv;
        value *= (1 - a) * (1 - b);
        if (n > std::abs(n1) / N + 2 && abs(a) < stop && abs(b) < stop)
            break;
        qn *= q;
    }
    return value;
}

// p(z) from the double series sum_m sum_n n q^{mn} (q_z^n + q_z^{-n} - 2),
// valid for 0 <= r1 < 1.
Complex wp_oracle(long n1, long n2, long N, const Complex& tau, const PrecisionContext& ctx)
{
    const Complex z = tau * ctx.rational(n1, N) + ctx.rational(n2, N);
    const Complex qz = exp(two_pi_i(ctx) * z);
    const Complex q = exp(two_pi_i(ctx) * tau);
    const Real stop = Real::pow10(-ctx.tail_digits(), ctx.bits());
    Complex sum = ctx.complex(0);
    Complex qm = q;
    for (long m = 1;; ++m) {
        Complex qmn = qm, qzn = qz;
        bool first_small = false;
        for (long n = 1;; ++n) {
            Complex qzn_inv = inverse(qzn);
            sum += qmn * (qzn + qzn_inv - 2) * n;
            // bound the term by magnitudes: q_z^n can hit 1 and zero a term early
            Real bound = abs(qmn) * (abs(qzn) + abs(qzn_inv) + 2) * n;
            if (bound < stop) {
                if (n == 1)
                    first_small = true;
                break;
            }
            qmn *= qm;
            qzn *= qz;
        }
        if (first_small)
            break;
        qm *= q;
    }
    const Complex four_pi2 = pow(two_pi_i(ctx), 2);
    return four_pi2 * (sum + ctx.rational(1, 12) + qz / pow(1 - qz, 2));
}

Complex cm_point(long num_re, long den_re, long d, long den_im, const PrecisionContext& ctx)
{
    return Complex(ctx.rational(num_re, den_re), sqrt(ctx.real(d)) / den_im);
}

} // namespace

TEST_CASE("domain checks")
{
    PrecisionContext ctx(60);
    CHECK_THROWS_AS(HalfPlanePoint(ctx.complex(1, 0)), DomainError);
    CHECK_THROWS_AS(HalfPlanePoint(ctx.complex(0, -1)), DomainError);
    CHECK_THROWS_AS(IndexPair(1, 1, 0), DomainError);
    HalfPlanePoint tau(ctx.complex(0, 1));
    CHECK_THROWS_AS(siegel(IndexPair(3, -6, 3), tau, ctx), DomainError);
    CHECK_THROWS_AS(wp(IndexPair(0, 5, 5), tau, ctx), DomainError);
    CHECK_THROWS_AS(reduce_index(IndexPair(0, 0, 4)), DomainError);
}

TEST_CASE("index pair helpers")
{
    IndexPair r(-1, 7, 5);
    CHECK(r.canonical() == IndexPair(4, 2, 5));
    CHECK(r.negated() == IndexPair(1, -7, 5));
    CHECK(r.doubled() == IndexPair(-2, 14, 5));
    CHECK(IndexPair(2, 4, 2).is_integral());
    CHECK_FALSE(IndexPair(1, 4, 2).is_integral());
}

TEST_CASE("j at CM points")
{
    PrecisionContext ctx(80);
    auto j_at = [&](const Complex& t) { return j(HalfPlanePoint(t), ctx); };
    CHECK(close(j_at(ctx.complex(0, 1)), ctx.complex(1728), 70));
    CHECK(abs(j_at(cm_point(-1, 2, 3, 2, ctx))) < Real::pow10(-70, ctx.bits()));
    CHECK(close(j_at(cm_point(0, 1, 2, 1, ctx)), ctx.complex(8000), 70));
    CHECK(close(j_at(cm_point(1, 2, 7, 2, ctx)), ctx.complex(-3375), 70));
    CHECK(close(j_at(cm_point(1, 2, 163, 2, ctx)), Complex(Real(mpz_class(-640320) * 640320 * 640320, ctx.bits())),
                70));
}

TEST_CASE("discriminant identities and eta transformations")
{
    PrecisionContext ctx(80);
    Gen gen(2024);
    for (int k = 0; k < 6; ++k) {
        Complex t = gen.tau(0.6, 1.8, ctx);
        HalfPlanePoint tau(t);
        LatticeInvariants inv = lattice_invariants(tau, ctx);
        CHECK(close(pow(inv.eta, 24), inv.delta, 75));
        CHECK(close(pow(inv.g2, 3) - 27 * pow(inv.g3, 2), inv.delta, 75));
        CHECK(close(inv.j(), 1728 * pow(inv.g2, 3) / inv.delta, 75));
        CHECK(close(eta(tau, ctx), inv.eta, 90));

        Complex e2 = pow(inv.eta, 2);
        CHECK(close(pow(eta(HalfPlanePoint(t + ctx.real(1)), ctx), 2), zeta(1, 12, ctx) * e2, 75));
        // -1/tau may leave the fundamental strip; eta still converges there for these tau
        Complex s = -inverse(t);
        CHECK(close(pow(eta(HalfPlanePoint(s), ctx), 2), zeta(9, 12, ctx) * t * e2, 70));
    }
}

TEST_CASE("j q-expansion leading coefficients")
{
    // j(tau) - 1/q at tau = i y for large y is dominated by 744 + 196884 q
    PrecisionContext ctx(60);
    HalfPlanePoint tau(ctx.complex(0, 4));
    Complex q = q_power(tau, ctx.real(1));
    Complex rest = j(tau, ctx) - inverse(q) - 744;
    CHECK(close(rest / q, ctx.complex(196884), 5));
}

TEST_CASE("q_power branch")
{
    PrecisionContext ctx(60);
    HalfPlanePoint tau(Complex(ctx.rational(1, 3), ctx.rational(5, 4)));
    CHECK(close(pow(q_power(tau, 1, 24, ctx), 24), q_power(tau, 1, 1, ctx), 55));
    CHECK(close(q_power(tau, 3, 7, ctx), q_power(tau, ctx.rational(3, 7)), 55));
}

TEST_CASE("Weierstrass p against the double series")
{
    PrecisionContext ctx(60);
    Gen gen(5);
    for (int k = 0; k < 12; ++k) {
        long N = gen.integer(2, 8);
        long n1 = gen.integer(0, N - 1), n2 = gen.integer(0, N - 1);
        if (n1 == 0 && n2 == 0)
            n2 = 1;
        Complex t = gen.tau(0.5, 2.0, ctx);
        HalfPlanePoint tau(t);
        CAPTURE(N);
        CAPTURE(n1);
        CAPTURE(n2);
        Complex p = wp(IndexPair(n1, n2, N), tau, ctx);
        CHECK(close(p, wp_oracle(n1, n2, N, t, ctx), 55));
        CHECK(close(wp(IndexPair(-n1, -n2, N), tau, ctx), p, 55));
        CHECK(close(wp(IndexPair(n1 + 3 * N, n2 - 2 * N, N), tau, ctx), p, 55));
    }
    Complex p_half = wp(IndexPair(0, 1, 2), HalfPlanePoint(ctx.complex(0, 1)), ctx);
    CHECK(abs(p_half.im()) < Real::pow10(-55, ctx.bits()));
}

TEST_CASE("Fricke functions")
{
    PrecisionContext ctx(60);
    HalfPlanePoint tau(Complex(ctx.rational(-1, 7), ctx.rational(9, 8)));
    IndexPair r(2, 3, 7);
    Complex f = fricke(r, tau, ctx);
    CHECK(close(fricke(r.negated(), tau, ctx), f, 55));
    CHECK(close(fricke(IndexPair(9, 3, 7), tau, ctx), f, 55));
    LatticeInvariants inv = lattice_invariants(tau, ctx);
    CHECK(close(f, -(128 * 243) * inv.g2 * inv.g3 / inv.delta * wp(r, tau, ctx), 55));

    HalfPlanePoint rho(cm_point(-1, 2, 3, 2, ctx));
    LatticeInvariants at_rho = lattice_invariants(rho, ctx);
    Complex scale = (128 * 243) * at_rho.g3 / at_rho.delta * wp(IndexPair(0, 1, 5), rho, ctx);
    CHECK(abs(fricke(IndexPair(0, 1, 5), rho, ctx)) / abs(scale) < Real::pow10(-50, ctx.bits()));
}

TEST_CASE("reduce_index examples")
{
    for (long N : {3L, 5L, 8L}) {
        ReducedIndex a = reduce_index(IndexPair(0, N + 1, N));
        CHECK(a.canonical == IndexPair(0, 1, N));
        CHECK(a.sign == -1);
        CHECK(a.phase.is_zero());

        ReducedIndex b = reduce_index(IndexPair(0, -1, N));
        CHECK(b.canonical == IndexPair(0, N - 1, N));
        CHECK(b.sign == -1);
        CHECK(b.phase.is_zero());

        ReducedIndex c = reduce_index(IndexPair(1, 2, N));
        CHECK(c.canonical == IndexPair(1, 2, N));
        CHECK(c.sign == 1);
        CHECK(c.phase.is_zero());
    }
    ReducedIndex d = reduce_index(IndexPair(7, 2, 5)); // s = (1, 0), c = (2/5, 2/5)
    CHECK(d.canonical == IndexPair(2, 2, 5));
    CHECK(d.sign == -1);
    CHECK(d.phase == Phase(-2, 10));
}

TEST_CASE("siegel against the literal product at arbitrary representatives")
{
    PrecisionContext ctx(60);
    Gen gen(99);
    for (int k = 0; k < 30; ++k) {
        long N = gen.integer(2, 9);
        long n1 = gen.integer(-2 * N, 2 * N), n2 = gen.integer(-2 * N, 2 * N);
        if (n1 % N == 0 && n2 % N == 0)
            n2 += 1;
        Complex t = gen.tau(0.5, 2.0, ctx);
        CAPTURE(N);
        CAPTURE(n1);
        CAPTURE(n2);
        Complex g = siegel(IndexPair(n1, n2, N), HalfPlanePoint(t), ctx);
        CHECK(close(g, siegel_oracle(n1, n2, N, t, ctx), 50));
    }
}

TEST_CASE("siegel and klein symmetries")
{
    PrecisionContext ctx(60);
    Gen gen(3);
    for (int k = 0; k < 10; ++k) {
        long N = gen.integer(3, 8);
        long n1 = gen.integer(0, N - 1), n2 = gen.integer(1, N - 1);
        Complex t = gen.tau(0.7, 1.5, ctx);
        HalfPlanePoint tau(t);
        IndexPair r(n1, n2, N);
        Complex g = siegel(r, tau, ctx);
        CHECK(close(siegel(r.negated(), tau, ctx), -g, 55));
        Complex kr = klein(r, tau, ctx);
        CHECK(close(kr * pow(eta(tau, ctx), 2), g, 55));
        CHECK(close(klein(r.negated(), tau, ctx), -kr, 55));

        // k_{r+s} = eps(r, s) k_r with eps written out directly
        long s1 = gen.integer(-2, 2), s2 = gen.integer(-2, 2);
        Real angle = -ctx.pi() * (ctx.rational(s1 * n2, N) - ctx.rational(s2 * n1, N));
        Complex eps = Complex::unit(angle) * (((s1 * s2 + s1 + s2) % 2 == 0) ? 1 : -1);
        CHECK(close(klein(IndexPair(n1 + s1 * N, n2 + s2 * N, N), tau, ctx), eps * kr, 55));

        // S and T
        CHECK(close(siegel(r, HalfPlanePoint(-inverse(t)), ctx), zeta(9, 12, ctx) * siegel(IndexPair(n2, -n1, N), tau, ctx),
                    50));
        CHECK(close(siegel(r, HalfPlanePoint(t + ctx.real(1)), ctx),
                    zeta(1, 12, ctx) * siegel(IndexPair(n1, n1 + n2, N), tau, ctx), 50));
    }
}

TEST_CASE("siegel order formula")
{
    CHECK(siegel_order(IndexPair(0, 1, 7)) == mpq_class(1, 12));
    CHECK(siegel_order(IndexPair(1, 0, 3)) == mpq_class(-1, 36));
    CHECK(siegel_order(IndexPair(1, 0, 2)) == mpq_class(-1, 24));
    CHECK(siegel_order(IndexPair(-2, 1, 3)) == siegel_order(IndexPair(1, 1, 3)));

    PrecisionContext ctx(60);
    // log|g_r(it)| ~ -2 pi t ord(r) for large t
    IndexPair r(2, 1, 5);
    auto log_abs = [&](long t) { return log(abs(siegel(r, HalfPlanePoint(ctx.complex(0, t)), ctx))); };
    Real slope = (log_abs(60) - log_abs(30)) / (-2 * ctx.pi() * 30);
    const double expected = siegel_order(r).get_d();
    CHECK(slope.to_double() == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("y function")
{
    PrecisionContext ctx(60);
    HalfPlanePoint tau(Complex(ctx.rational(1, 5), ctx.rational(6, 5)));
    CHECK(y_fn(IndexPair(0, 3, 6), tau, ctx).re().is_zero());
    CHECK(y_fn(IndexPair(1, 1, 2), tau, ctx).im().is_zero());

    // y^2 eta^12 = p'^2 = 4p^3 - g2 p - g3
    Gen gen(17);
    for (int k = 0; k < 8; ++k) {
        long N = gen.integer(3, 8);
        long n1 = gen.integer(0, N - 1), n2 = gen.integer(1, N - 1);
        Complex t = gen.tau(0.5, 2.0, ctx);
        HalfPlanePoint pt(t);
        IndexPair r(n1, n2, N);
        LatticeInvariants inv = lattice_invariants(pt, ctx);
        Complex p = wp(r, pt, ctx);
        CHECK(close(pow(y_fn(r, pt, ctx), 2) * pow(inv.eta, 12), 4 * pow(p, 3) - inv.g2 * p - inv.g3, 50));
    }

    // g^E and y^E are real at theta_K for E = 12N/gcd(6,N); y itself is only
    // real up to a root of unity
    for (long d : {-40L, -19L, -23L}) {
        Complex theta = d % 4 == 0 ? Complex(ctx.real(0), sqrt(ctx.real(-d)) / 2)
                                   : Complex(-ctx.rational(1, 2), sqrt(ctx.real(-d)) / 2);
        HalfPlanePoint pt(theta);
        for (long N = 3; N <= 8; ++N) {
            const long E = 12 * N / std::gcd(6L, N);
            Complex g = pow(siegel(IndexPair(0, 1, N), pt, ctx), E);
            Complex y = pow(y_fn(IndexPair(0, 1, N), pt, ctx), E);
            CHECK(abs(g.im()) / abs(g) < Real::pow10(-55, ctx.bits()));
            CHECK(abs(y.im()) / abs(y) < Real::pow10(-55, ctx.bits()));
        }
    }
}

TEST_CASE("Weber function branches")
{
    PrecisionContext ctx(60);
    IndexPair r(0, 1, 5);
    HalfPlanePoint i(ctx.complex(0, 1));
    HalfPlanePoint rho(cm_point(-1, 2, 3, 2, ctx));
    HalfPlanePoint generic(Complex(ctx.real(0), sqrt(ctx.real(10))));
    CHECK(weber_h(r, i, ctx).branch == WeberBranch::J1728);
    CHECK(weber_h(r, rho, ctx).branch == WeberBranch::J0);
    WeberValue h = weber_h(r, generic, ctx);
    REQUIRE(h.branch == WeberBranch::Generic);
    LatticeInvariants inv = lattice_invariants(generic, ctx);
    CHECK(close(h.value, inv.g2 * inv.g3 / inv.delta * wp(r, generic, ctx), 55));
    LatticeInvariants at_i = lattice_invariants(i, ctx);
    CHECK(close(weber_h(r, i, ctx).value, pow(at_i.g2, 2) / at_i.delta * pow(wp(r, i, ctx), 2), 55));
}
