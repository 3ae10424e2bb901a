#ifndef RAYCLASS_ERRORS_HPP
#define RAYCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rayclass {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can catch one type and still tell the cases apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad precision or other run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a function (im(tau) <= 0, lattice point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input such as a non-fundamental discriminant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The field or level falls outside what a construction supports.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis (d_K <= -19, N >= 3, ...) is not met.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Exponent is not a multiple of 12N/gcd(6,N).
class ExponentError : public Error {
public:
    ExponentError(const std::string& what, long required_multiple)
        : Error(what), required_multiple_(required_multiple) {}
    long required_multiple() const noexcept { return required_multiple_; }

private:
    long required_multiple_;
};

/// A coefficient expected to be an integer is not within tolerance of one.
class IntegralityError : public Error {
public:
    IntegralityError(const std::string& what, std::size_t degree, double residual)
        : Error(what), degree_(degree), residual_(residual) {}
    std::size_t degree() const noexcept { return degree_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t degree_;
    double residual_;
};

/// A numerical identity that must hold failed to close.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace rayclass

#endif
