#include "rayclass/reciprocity.hpp"

#include "rayclass/errors.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rayclass {

namespace {

long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

long inverse_mod(long a, long n)
{
    // extended Euclid; a is invertible mod n by construction
    long t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::logic_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
    return mod(t, n);
}

std::vector<std::pair<long, int>> factor(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long ipow(long p, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= p;
    return r;
}

long half_exact(long x)
{
    if (x % 2 != 0)
        throw std::logic_error("u_Q entry " + std::to_string(x) + "/2 is not integral");
    return x / 2;
}

void require_w_hypothesis(long N, const CMField& field)
{
    if (N < 3)
        throw UnsupportedError("level must be at least 3, got " + std::to_string(N));
    if (field.discriminant > -7)
        throw UnsupportedError("W_{N,theta} needs K different from Q(sqrt(-1)) and Q(sqrt(-3)); got d_K = " +
                               std::to_string(field.discriminant));
}

// The case matrix of u_Q at the prime p, as integers (not yet reduced).
std::array<long, 4> local_u(const ReducedForm& Q, long p, bool d_even)
{
    const long a = Q.a, b = Q.b, c = Q.c;
    const bool p_divides_a = a % p == 0;
    const bool p_divides_c = c % p == 0;
    if (d_even) {
        if (!p_divides_a)
            return {a, half_exact(b), 0, 1};
        if (!p_divides_c)
            return {-half_exact(b), -c, 1, 0};
        return {-a - half_exact(b), -half_exact(b) - c, 1, -1};
    }
    if (!p_divides_a)
        return {a, half_exact(b - 1), 0, 1};
    if (!p_divides_c)
        return {-half_exact(b + 1), -c, 1, 0};
    return {-a - half_exact(b + 1), half_exact(1 - b) - c, 1, -1};
}

} // namespace

MatModN::MatModN(long a, long b, long c, long d, long level)
    : a_(mod(a, level)), b_(mod(b, level)), c_(mod(c, level)), d_(mod(d, level)), level_(level)
{
    if (level <= 0)
        throw DomainError("matrix level must be positive");
}

long MatModN::det() const { return mod(a_ * d_ - b_ * c_, level_); }

bool MatModN::is_invertible() const { return std::gcd(det(), level_) == 1; }

MatModN MatModN::canonical_pm() const
{
    for (long x : {c_, d_, a_, b_}) {
        if (mod(2 * x, level_) == 0)
            continue;
        return 2 * x < level_ ? *this : negated();
    }
    return *this;
}

MatModN MatModN::operator*(const MatModN& rhs) const
{
    if (level_ != rhs.level_)
        throw DomainError("matrix levels differ");
    return MatModN(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_, c_ * rhs.a_ + d_ * rhs.c_,
                   c_ * rhs.b_ + d_ * rhs.d_, level_);
}

std::string MatModN::to_string() const
{
    return "(" + std::to_string(a_) + "," + std::to_string(b_) + ";" + std::to_string(c_) + "," +
           std::to_string(d_) + ")";
}

std::vector<MatModN> w_group(long N, const CMField& field)
{
    require_w_hypothesis(N, field);
    std::vector<MatModN> out;
    for (long s = 0; s < N; ++s) {
        for (long t = 0; t < N; ++t) {
            MatModN m(t - field.B * s, -field.C * s, s, t, N);
            if (!m.is_invertible())
                continue;
            // keep only the representative itself; its partner -m is skipped
            if (m.canonical_pm() == m)
                out.push_back(m);
        }
    }
    return out;
}

MatModN u_Q(const ReducedForm& Q, long N, const CMField& field)
{
    if (N <= 0)
        throw DomainError("level must be positive");
    if (Q.discriminant() != field.discriminant)
        throw ValidationError("form " + Q.to_string() + " does not have discriminant " +
                              std::to_string(field.discriminant));
    const bool d_even = mod(field.discriminant, 4) == 0;
    std::array<long, 4> glued{0, 0, 0, 0};
    for (auto [p, e] : factor(N)) {
        const long pe = ipow(p, e);
        const long cofactor = N / pe;
        const long lift = cofactor * inverse_mod(cofactor % pe, pe) % N;
        std::array<long, 4> local = local_u(Q, p, d_even);
        for (std::size_t k = 0; k < 4; ++k)
            glued[k] = mod(glued[k] + mod(local[k], pe) * lift, N);
    }
    MatModN u(glued[0], glued[1], glued[2], glued[3], N);
    if (!u.is_invertible())
        throw std::logic_error("u_Q for " + Q.to_string() + " is not invertible mod " + std::to_string(N));
    return u;
}

IndexPair act_on_index(const IndexPair& r, const MatModN& M)
{
    if (r.level != M.level())
        throw DomainError("index level " + std::to_string(r.level) + " does not match matrix level " +
                          std::to_string(M.level()));
    const long N = M.level();
    return IndexPair(mod(r.num1 * M.a() + r.num2 * M.c(), N), mod(r.num1 * M.b() + r.num2 * M.d(), N), N);
}

std::vector<GaloisLabel> galois_labels(long N, const CMField& field, const PrecisionContext& ctx)
{
    std::vector<MatModN> w = w_group(N, field);
    std::vector<ReducedForm> forms = reduced_forms(field.discriminant);
    std::vector<GaloisLabel> labels;
    labels.reserve(w.size() * forms.size());
    for (const ReducedForm& Q : forms) {
        MatModN u = u_Q(Q, N, field);
        Complex theta = theta_Q(Q, ctx);
        for (const MatModN& alpha : w)
            labels.push_back({alpha, Q, u, theta});
    }
    return labels;
}

} // namespace rayclass
