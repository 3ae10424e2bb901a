#include "rayclass/bigfloat.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace rayclass {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

} // namespace

Real::Real() : Real(mpfr_prec_t{64}) {}

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, kRound);
}

Real::Real(const mpz_class& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), kRound);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, decimal.c_str(), 10, kRound);
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, kRound);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, kRound);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rational(long num, long den, mpfr_prec_t bits)
{
    Real r(num, bits);
    mpfr_div_si(r.v_, r.v_, den, kRound);
    return r;
}

Real Real::pi(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.v_, kRound);
    return r;
}

Real Real::pow10(long exponent, mpfr_prec_t bits)
{
    Real r(10, bits);
    mpfr_pow_si(r.v_, r.v_, exponent, kRound);
    return r;
}

mpz_class Real::round() const
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string Real::to_string(int digits) const
{
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, kRound);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1)
        out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

std::string Real::to_fixed(int decimals) const
{
    int len = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
    std::vector<char> buf(static_cast<size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_);
    return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs)
{
    if (rhs.prec() > prec())
        mpfr_prec_round(v_, rhs.prec(), kRound);
    mpfr_add(v_, v_, rhs.v_, kRound);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    if (rhs.prec() > prec())
        mpfr_prec_round(v_, rhs.prec(), kRound);
    mpfr_sub(v_, v_, rhs.v_, kRound);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    if (rhs.prec() > prec())
        mpfr_prec_round(v_, rhs.prec(), kRound);
    mpfr_mul(v_, v_, rhs.v_, kRound);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    if (rhs.prec() > prec())
        mpfr_prec_round(v_, rhs.prec(), kRound);
    mpfr_div(v_, v_, rhs.v_, kRound);
    return *this;
}

Real& Real::operator*=(long rhs)
{
    mpfr_mul_si(v_, v_, rhs, kRound);
    return *this;
}

Real& Real::operator/=(long rhs)
{
    mpfr_div_si(v_, v_, rhs, kRound);
    return *this;
}

Real operator-(const Real& x)
{
    Real r(x.prec());
    mpfr_neg(r.get(), x.get(), kRound);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(wider(a, b));
    mpfr_add(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(wider(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(wider(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(wider(a, b));
    mpfr_div(r.get(), a.get(), b.get(), kRound);
    return r;
}

Real operator+(const Real& a, long b)
{
    Real r(a.prec());
    mpfr_add_si(r.get(), a.get(), b, kRound);
    return r;
}

Real operator-(const Real& a, long b)
{
    Real r(a.prec());
    mpfr_sub_si(r.get(), a.get(), b, kRound);
    return r;
}

Real operator-(long a, const Real& b)
{
    Real r(b.prec());
    mpfr_si_sub(r.get(), a, b.get(), kRound);
    return r;
}

Real operator*(const Real& a, long b)
{
    Real r(a.prec());
    mpfr_mul_si(r.get(), a.get(), b, kRound);
    return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b)
{
    Real r(a.prec());
    mpfr_div_si(r.get(), a.get(), b, kRound);
    return r;
}

Real operator*(const Real& a, const mpz_class& b)
{
    Real r(a.prec());
    mpfr_mul_z(r.get(), a.get(), b.get_mpz_t(), kRound);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }

Real abs(const Real& x)
{
    Real r(x.prec());
    mpfr_abs(r.get(), x.get(), kRound);
    return r;
}

Real sqrt(const Real& x)
{
    Real r(x.prec());
    mpfr_sqrt(r.get(), x.get(), kRound);
    return r;
}

Real exp(const Real& x)
{
    Real r(x.prec());
    mpfr_exp(r.get(), x.get(), kRound);
    return r;
}

Real log(const Real& x)
{
    Real r(x.prec());
    mpfr_log(r.get(), x.get(), kRound);
    return r;
}

Real log10(const Real& x)
{
    Real r(x.prec());
    mpfr_log10(r.get(), x.get(), kRound);
    return r;
}

Real sin(const Real& x)
{
    Real r(x.prec());
    mpfr_sin(r.get(), x.get(), kRound);
    return r;
}

Real cos(const Real& x)
{
    Real r(x.prec());
    mpfr_cos(r.get(), x.get(), kRound);
    return r;
}

Real pow(const Real& x, long n)
{
    Real r(x.prec());
    mpfr_pow_si(r.get(), x.get(), n, kRound);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x)
{
    return os << x.to_string(static_cast<int>(os.precision()));
}

// ---------------------------------------------------------------- Complex

Complex Complex::unit(const Real& angle)
{
    Real c(angle.prec()), s(angle.prec());
    mpfr_sin_cos(s.get(), c.get(), angle.get(), kRound);
    return Complex(std::move(c), std::move(s));
}

Complex& Complex::operator+=(const Complex& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs)
{
    *this = *this * rhs;
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs)
{
    *this = *this / rhs;
    return *this;
}

Complex& Complex::operator*=(const Real& rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex operator-(const Complex& z) { return Complex(-z.re(), -z.im()); }

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re() + b.re(), a.im() + b.im()); }

Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re() - b.re(), a.im() - b.im()); }

Complex operator*(const Complex& a, const Complex& b)
{
    mpfr_prec_t bits = std::max(a.prec(), b.prec());
    Real re(bits), im(bits);
    // fmms/fmma keep the cross terms exact before the single final rounding
    mpfr_fmms(re.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), kRound);
    mpfr_fmma(im.get(), a.re().get(), b.im().get(), a.im().get(), b.re().get(), kRound);
    return Complex(std::move(re), std::move(im));
}

Complex operator/(const Complex& a, const Complex& b) { return a * inverse(b); }

Complex operator+(const Complex& a, const Real& b) { return Complex(a.re() + b, a.im()); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re() - b, a.im()); }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re(), -b.im()); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re() * b, a.im() * b); }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re() / b, a.im() / b); }
Complex operator+(const Complex& a, long b) { return Complex(a.re() + b, a.im()); }
Complex operator-(const Complex& a, long b) { return Complex(a.re() - b, a.im()); }
Complex operator-(long a, const Complex& b) { return Complex(a - b.re(), -b.im()); }
Complex operator*(const Complex& a, long b) { return Complex(a.re() * b, a.im() * b); }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, long b) { return Complex(a.re() / b, a.im() / b); }

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real norm(const Complex& z)
{
    Real r(z.prec());
    mpfr_fmma(r.get(), z.re().get(), z.re().get(), z.im().get(), z.im().get(), kRound);
    return r;
}

Real abs(const Complex& z)
{
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), kRound);
    return r;
}

Complex exp(const Complex& z) { return Complex::unit(z.im()) * exp(z.re()); }

Complex inverse(const Complex& z)
{
    Real n = norm(z);
    return Complex(z.re() / n, -(z.im() / n));
}

Complex pow(const Complex& z, long n)
{
    if (n < 0)
        return inverse(pow(z, -n));
    Complex result(Real(1, z.prec()), Real(0, z.prec()));
    Complex base = z;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Complex& z)
{
    int digits = static_cast<int>(os.precision());
    os << z.re().to_string(digits);
    if (z.im().sign() < 0)
        os << " - " << abs(z.im()).to_string(digits) << "*I";
    else
        os << " + " << z.im().to_string(digits) << "*I";
    return os;
}

} // namespace rayclass
