#ifndef RAYCLASS_CLASS_FORMS_HPP
#define RAYCLASS_CLASS_FORMS_HPP

#include "rayclass/numerics.hpp"

#include <string>
#include <vector>

namespace rayclass {

/// Fundamental discriminant test: d = 1 mod 4 squarefree, or d = 4m with
/// m = 2, 3 mod 4 squarefree.
bool is_fundamental_discriminant(long d);

/*
 * Imaginary quadratic field K of discriminant d_K together with the
 * generator theta_K of O_K = [theta_K, 1] and its minimal polynomial
 * X^2 + B X + C.
 */
struct CMField {
    long discriminant = 0;
    Complex theta;
    long B = 0;
    long C = 0;
};

/// Primitive positive definite form a X^2 + b XY + c Y^2 in reduced position.
struct ReducedForm {
    long a = 0;
    long b = 0;
    long c = 0;

    long discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const ReducedForm&) const = default;
    std::string to_string() const;
};

/// Throws ValidationError unless d is a negative fundamental discriminant.
CMField make_field(long d, const PrecisionContext& ctx);

/// All reduced forms of discriminant d, sorted by (a, b).
std::vector<ReducedForm> reduced_forms(long d);

/// (-b + sqrt(d)) / (2a), in the upper half-plane.
Complex theta_Q(const ReducedForm& Q, const PrecisionContext& ctx);

ReducedForm unit_form(long d);

} // namespace rayclass

#endif
