#pragma once

#include <string>

#include "superint/param_poly.hpp"

namespace superint {

// num/den with gcd(num, den) = 1 and den monic under the graded lex order.
class ParamRatFn {
 public:
  ParamRatFn() : den_(1) {}
  ParamRatFn(ParamPoly num) : num_(std::move(num)), den_(1) {}
  ParamRatFn(const GaussRational& c) : num_(c), den_(1) {}
  ParamRatFn(const Rational& c) : num_(c), den_(1) {}
  template <std::integral I>
  ParamRatFn(I n) : num_(n), den_(1) {}

  static ParamRatFn make(ParamPoly num, ParamPoly den);
  static ParamRatFn var(Var v) { return ParamRatFn(ParamPoly::var(v)); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  GaussRational constant_value() const { return num_.constant_value(); }

  ParamRatFn operator-() const;
  ParamRatFn& operator+=(const ParamRatFn& o) { return *this = *this + o; }
  ParamRatFn& operator-=(const ParamRatFn& o) { return *this = *this - o; }
  ParamRatFn& operator*=(const ParamRatFn& o) { return *this = *this * o; }
  ParamRatFn& operator/=(const ParamRatFn& o) { return *this = *this / o; }
  ParamRatFn& operator*=(const GaussRational& c);

  friend ParamRatFn operator+(const ParamRatFn& a, const ParamRatFn& b);
  friend ParamRatFn operator-(const ParamRatFn& a, const ParamRatFn& b);
  friend ParamRatFn operator*(const ParamRatFn& a, const ParamRatFn& b);
  friend ParamRatFn operator/(const ParamRatFn& a, const ParamRatFn& b);
  friend bool operator==(const ParamRatFn& a, const ParamRatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ParamRatFn inverse() const;
  ParamRatFn pow(int e) const;
  ParamRatFn swap_vars(Var x, Var y) const;
  std::string str() const;

 private:
  friend ParamRatFn reduced_unchecked(ParamPoly num, ParamPoly den);
  ParamPoly num_;
  ParamPoly den_;
};

std::ostream& operator<<(std::ostream& os, const ParamRatFn& r);

}  // namespace superint
