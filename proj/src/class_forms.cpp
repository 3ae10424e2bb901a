#include "rayclass/class_forms.hpp"

#include "rayclass/errors.hpp"

#include <numeric>

namespace rayclass {

namespace {

bool squarefree(long n)
{
    n = n < 0 ? -n : n;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

long mod4(long d) { return ((d % 4) + 4) % 4; }

void require_fundamental(long d)
{
    if (d >= 0)
        throw ValidationError("discriminant must be negative, got " + std::to_string(d));
    if (!is_fundamental_discriminant(d))
        throw ValidationError("discriminant " + std::to_string(d) + " is not fundamental");
}

Complex sqrt_negative(long d, const PrecisionContext& ctx) { return Complex(ctx.real(0), sqrt(ctx.real(-d))); }

} // namespace

bool is_fundamental_discriminant(long d)
{
    if (d == 0 || d == 1)
        return false;
    if (mod4(d) == 1)
        return squarefree(d);
    if (mod4(d) != 0)
        return false;
    long m = d / 4;
    long m4 = mod4(m);
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

std::string ReducedForm::to_string() const
{
    return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

CMField make_field(long d, const PrecisionContext& ctx)
{
    require_fundamental(d);
    CMField field;
    field.discriminant = d;
    if (mod4(d) == 0) {
        field.B = 0;
        field.C = -d / 4;
        field.theta = sqrt_negative(d, ctx) / 2;
    } else {
        field.B = 1;
        field.C = (1 - d) / 4;
        field.theta = (sqrt_negative(d, ctx) - ctx.real(1)) / 2;
    }
    return field;
}

std::vector<ReducedForm> reduced_forms(long d)
{
    require_fundamental(d);
    std::vector<ReducedForm> forms;
    // a <= sqrt(-d/3)
    for (long a = 1; 3 * a * a <= -d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if ((b - d) % 2 != 0)
                continue;
            long num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

Complex theta_Q(const ReducedForm& Q, const PrecisionContext& ctx)
{
    return (sqrt_negative(Q.discriminant(), ctx) - ctx.real(Q.b)) / (2 * Q.a);
}

ReducedForm unit_form(long d)
{
    require_fundamental(d);
    if (mod4(d) == 0)
        return {1, 0, -d / 4};
    return {1, 1, (1 - d) / 4};
}

} // namespace rayclass
