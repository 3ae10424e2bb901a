#ifndef RAYCLASS_NUMERICS_HPP
#define RAYCLASS_NUMERICS_HPP

#include "rayclass/bigfloat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace rayclass {

/*
 * Working precision for a computation.
 *
 * `digits` is the accuracy the caller asks for; evaluation actually runs at
 * digits + guard decimal digits so that truncated tails and rounding slack
 * are absorbed. Identity checks use tolerance() = 10^(-digits+guard).
 */
class PrecisionContext {
public:
    static constexpr int kMinDigits = 50;
    static constexpr int kDefaultDigits = 256;
    static constexpr int kDefaultGuard = 20;

    explicit PrecisionContext(int digits = kDefaultDigits, int guard = kDefaultGuard);

    int digits() const { return digits_; }
    int guard() const { return guard_; }
    mpfr_prec_t bits() const { return bits_; }

    /// 10^(-digits+guard)
    Real tolerance() const;
    /// Series and products stop once the next term is below 10^(-digits-guard).
    int tail_digits() const { return digits_ + guard_; }

    Real real(long value) const { return Real(value, bits_); }
    Real rational(long num, long den) const { return Real::rational(num, den, bits_); }
    Real pi() const { return Real::pi(bits_); }
    Complex complex(long re, long im = 0) const { return Complex(real(re), real(im)); }

private:
    int digits_;
    int guard_;
    mpfr_prec_t bits_;
};

/// Throws ConfigError for digits < 50.
PrecisionContext with_precision(int digits);

/*
 * An exact root of unity e^{2 pi i t}, stored as the rational t in [0, 1).
 * Root-of-unity bookkeeping for Siegel functions stays in this type and is
 * converted to a floating value only at the very end.
 */
class Phase {
public:
    Phase() = default;
    Phase(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Phase operator+(const Phase& rhs) const;
    Phase operator-(const Phase& rhs) const;
    Phase operator-() const;
    Phase operator*(std::int64_t k) const;
    bool operator==(const Phase& rhs) const = default;

    /// e^{2 pi i t}; exact for t in {0, 1/4, 1/2, 3/4}.
    Complex unit(mpfr_prec_t bits) const;
    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Dense integer polynomial, coefficients in ascending degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& operator[](std::size_t k) const { return coeffs_[k]; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// One line in descending degree: `X^2 - 3*X + 1`.
    std::string to_string() const;
    std::vector<std::string> decimal_coefficients() const;

    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

/// Monic coefficients (ascending) of prod (X - root), expanded one root at a time.
std::vector<Complex> poly_from_roots(std::span<const Complex> roots, const PrecisionContext& ctx);

struct IntegralityResidual {
    Real max_imag;
    Real max_distance; ///< max |re - round(re)|
    std::size_t worst_degree = 0;
};

IntegralityResidual integrality_residual(std::span<const Complex> coeffs);

/// Rounds every coefficient; throws IntegralityError when any coefficient is
/// farther than `tol` from an integer, real part and imaginary part alike.
IntPolynomial round_to_integer_poly(std::span<const Complex> coeffs, const Real& tol);

/// Default integrality tolerance, independent of precision.
Real default_integrality_tolerance(const PrecisionContext& ctx);

/// Apply `fn` to each index in [0, count) on up to hardware_concurrency threads.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, Fn fn)
{
    std::vector<Result> out(count);
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace rayclass

#endif
