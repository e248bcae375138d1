#pragma once

#include <optional>

#include "superint/param_poly.hpp"

namespace superint {

// Scales p so that its leading coefficient is 1 (zero stays zero).
ParamPoly make_monic(const ParamPoly& p);

// Greatest common divisor over Q(i), monic.  gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);
// Throws std::domain_error when b does not divide a.
ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b);

// Normal form of a modulo the principal ideal (d) under the graded lex order.
ParamPoly remainder(const ParamPoly& a, const ParamPoly& d);

}  // namespace superint
