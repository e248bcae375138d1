#pragma once

#include <map>
#include <string>
#include <utility>

#include "superint/fun_element.hpp"

namespace superint {

// Σ F_{mn}(u1,u2) ∂1^m ∂2^n, coefficients on the left.
class DiffOp {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, FunElement>;

  DiffOp() = default;
  DiffOp(Ring ring, Rational k) : ring_(ring), k_(std::move(k)) {}

  static DiffOp mult(const FunElement& f);  // multiplication operator
  static DiffOp d(Ring ring, const Rational& k, int m, int n, const ParamRatFn& c = 1);

  Ring ring() const { return ring_; }
  const Rational& k() const { return k_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int order() const;  // max m+n, −1 for the zero operator
  FunElement coeff(int m, int n) const;
  size_t term_count() const;  // total function monomials

  void add_term(int m, int n, const FunElement& f);

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const ParamRatFn& c);
  friend DiffOp operator+(DiffOp x, const DiffOp& y) { return x += y; }
  friend DiffOp operator-(DiffOp x, const DiffOp& y) { return x -= y; }
  friend DiffOp operator*(DiffOp x, const ParamRatFn& c) { return x *= c; }
  friend DiffOp operator*(const ParamRatFn& c, DiffOp x) { return x *= c; }
  friend bool operator==(const DiffOp& x, const DiffOp& y);

  // Left multiplication by a function.
  DiffOp lmul(const FunElement& f) const;
  DiffOp map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const;

  std::string str() const;
  void check_ring(const DiffOp& o) const;

 private:
  Ring ring_ = Ring::Exp;
  Rational k_ = Rational(1);
  TermMap t_;
};

DiffOp compose(const DiffOp& x, const DiffOp& y);
DiffOp commutator(const DiffOp& x, const DiffOp& y);
DiffOp power(const DiffOp& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const DiffOp& d);

}  // namespace superint
