#ifndef RAYCLASS_BIGFLOAT_HPP
#define RAYCLASS_BIGFLOAT_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace rayclass {

/*
 * Arbitrary-precision real backed by an mpfr_t.
 *
 * Every value carries its own precision in bits. Binary operations produce a
 * result at the larger of the two operand precisions, so values built from a
 * single PrecisionContext never lose bits by mixing. Rounding is always to
 * nearest. Values are independent objects with no shared state, so distinct
 * values may be used from distinct threads freely.
 */
class Real {
public:
    Real();
    explicit Real(mpfr_prec_t bits);
    Real(long value, mpfr_prec_t bits);
    Real(const mpz_class& value, mpfr_prec_t bits);
    Real(const std::string& decimal, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real rational(long num, long den, mpfr_prec_t bits);
    static Real pi(mpfr_prec_t bits);
    static Real pow10(long exponent, mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer.
    mpz_class round() const;
    /// Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits) const;
    /// Fixed notation, for values whose integer part should print in full.
    std::string to_fixed(int decimals) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);

private:
    mpfr_t v_;
};

Real operator-(const Real& x);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator*(const Real& a, const mpz_class& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Complex number as a pair of Reals at a common precision.
class Complex {
public:
    Complex() = default;
    explicit Complex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {}

    /// e^{i angle}
    static Complex unit(const Real& angle);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);
    Complex& operator*=(const Real& rhs);

private:
    Real re_;
    Real im_;
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
Complex operator*(const Complex& a, long b);
Complex operator*(long a, const Complex& b);
Complex operator/(const Complex& a, long b);

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
Complex inverse(const Complex& z);

std::ostream& operator<<(std::ostream& os, const Complex& z);

} // namespace rayclass

#endif
