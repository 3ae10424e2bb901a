#include "rayclass/numerics.hpp"

#include "rayclass/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rayclass {

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard)
{
    if (digits < kMinDigits)
        throw ConfigError("precision must be at least " + std::to_string(kMinDigits) +
                          " decimal digits, got " + std::to_string(digits));
    if (guard <= 0 || guard >= digits)
        throw ConfigError("guard digits must lie in [1, digits), got " + std::to_string(guard));
    // log2(10) = 3.3219...; a few extra bits cover conversion rounding.
    bits_ = static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.321928094887362)) + 16;
}

Real PrecisionContext::tolerance() const { return Real::pow10(-(digits_ - guard_), bits_); }

PrecisionContext with_precision(int digits) { return PrecisionContext(digits); }

// ------------------------------------------------------------------- Phase

Phase::Phase(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("phase with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0)
        num += den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Phase Phase::operator+(const Phase& rhs) const
{
    std::int64_t l = std::lcm(den_, rhs.den_);
    return Phase(num_ * (l / den_) + rhs.num_ * (l / rhs.den_), l);
}

Phase Phase::operator-() const { return Phase(-num_, den_); }

Phase Phase::operator-(const Phase& rhs) const { return *this + (-rhs); }

Phase Phase::operator*(std::int64_t k) const { return Phase((num_ * (k % den_)) % den_, den_); }

Complex Phase::unit(mpfr_prec_t bits) const
{
    if (den_ == 1)
        return Complex(Real(1, bits), Real(0, bits));
    if (den_ == 2)
        return Complex(Real(-1, bits), Real(0, bits));
    if (den_ == 4)
        return num_ == 1 ? Complex(Real(0, bits), Real(1, bits)) : Complex(Real(0, bits), Real(-1, bits));
    Real angle = Real::pi(bits) * (2 * num_);
    angle /= den_;
    return Complex::unit(angle);
}

std::string Phase::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

// ----------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "X";
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> IntPolynomial::decimal_coefficients() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.get_str());
    return out;
}

// ---------------------------------------------------------- root expansion

std::vector<Complex> poly_from_roots(std::span<const Complex> roots, const PrecisionContext& ctx)
{
    if (roots.empty())
        throw DomainError("poly_from_roots needs at least one root");
    std::vector<Complex> c{ctx.complex(1)};
    c.reserve(roots.size() + 1);
    for (const Complex& root : roots) {
        // multiply by (X - root), highest degree first so c[i-1] is still old
        c.push_back(c.back());
        for (std::size_t i = c.size() - 2; i > 0; --i)
            c[i] = c[i - 1] - root * c[i];
        c[0] = -(root * c[0]);
    }
    return c;
}

IntegralityResidual integrality_residual(std::span<const Complex> coeffs)
{
    mpfr_prec_t bits = coeffs.empty() ? 64 : coeffs.front().prec();
    IntegralityResidual res{Real(bits), Real(bits), 0};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Real im = abs(coeffs[k].im());
        Real dist = abs(coeffs[k].re() - Real(coeffs[k].re().round(), bits));
        if (im > res.max_imag)
            res.max_imag = im;
        if (dist > res.max_distance) {
            res.max_distance = dist;
            res.worst_degree = k;
        }
    }
    return res;
}

IntPolynomial round_to_integer_poly(std::span<const Complex> coeffs, const Real& tol)
{
    if (!(tol > 0))
        throw DomainError("integrality tolerance must be positive");
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Complex& c = coeffs[k];
        mpz_class nearest = c.re().round();
        Real dist = abs(c.re() - Real(nearest, c.prec()));
        Real im = abs(c.im());
        if (!(im < tol) || !(dist < tol)) {
            Real worst = max(im, dist);
            std::ostringstream msg;
            msg << "coefficient of degree " << k << " is not integral: residual " << worst.to_string(6)
                << " exceeds tolerance " << tol.to_string(3);
            throw IntegralityError(msg.str(), k, worst.to_double());
        }
        out.push_back(std::move(nearest));
    }
    return IntPolynomial(std::move(out));
}

Real default_integrality_tolerance(const PrecisionContext& ctx) { return Real::pow10(-30, ctx.bits()); }

} // namespace rayclass
