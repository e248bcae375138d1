#pragma once

#include <string>

#include "superint/diffop.hpp"

namespace superint {

// H = (f1+f2)^{-1}(∂1² + ∂2² + v1 + v2), with f1, v1 functions of u1 and f2, v2 of u2.
struct SeparableSystem {
  std::string name;
  Ring ring = Ring::Exp;
  Rational k;
  FunElement f1, f2, v1, v2;

  FunElement zero() const { return FunElement(ring, k); }
  FunElement one() const { return FunElement(ring, k, 1); }
  FunElement inv_f() const;  // (f1+f2)^{-1}, throws if not a unit of the ring
};

// Checks the separation structure; throws std::invalid_argument.
SeparableSystem make_system(std::string name, FunElement f1, FunElement f2, FunElement v1, FunElement v2);

// V = α(x+iy)^{k−1}/(x−iy)^{k+1} in polar coordinates x+iy = e^{R+iθ}.
SeparableSystem cartesian_system(const Rational& k);
// αr² + β/(r²cos²kθ) + γ/(r²sin²kθ) with r = e^R.
SeparableSystem ttw_system(const Rational& k);

DiffOp build_H(const SeparableSystem& sys);
DiffOp build_L2(const SeparableSystem& sys);

}  // namespace superint
