#pragma once

#include <map>
#include <utility>

#include "superint/canonical.hpp"
#include "superint/diffop.hpp"

namespace superint {

// Phase-space function Σ F_{mn}(u1,u2) p1^m p2^n.
class PhaseFn {
 public:
  using Key = std::pair<int, int>;

  PhaseFn() = default;
  PhaseFn(Ring ring, Rational k) : ring_(ring), k_(std::move(k)) {}
  static PhaseFn fn(const FunElement& f);
  static PhaseFn p(Ring ring, const Rational& k, int m, int n);

  const std::map<Key, FunElement>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(int m, int n, const FunElement& f);

  PhaseFn& operator+=(const PhaseFn& o);
  PhaseFn& operator-=(const PhaseFn& o);
  friend PhaseFn operator+(PhaseFn x, const PhaseFn& y) { return x += y; }
  friend PhaseFn operator-(PhaseFn x, const PhaseFn& y) { return x -= y; }
  friend PhaseFn operator*(const PhaseFn& x, const PhaseFn& y);
  friend bool operator==(const PhaseFn& x, const PhaseFn& y) {
    return (x.is_zero() && y.is_zero()) || x.t_ == y.t_;
  }

  PhaseFn diff_u(Coord u) const;
  PhaseFn diff_p(Coord u) const;
  PhaseFn lmul(const FunElement& f) const;

 private:
  Ring ring_ = Ring::Exp;
  Rational k_ = Rational(1);
  std::map<Key, FunElement> t_;
};

PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g);

// Classical ℋ = (p1² + p2² + v1 + v2)/(f1 + f2) and 𝓛2 = (f2(p1² + v1) − f1(p2² + v2))/(f1 + f2).
PhaseFn classical_H(const SeparableSystem& sys);
PhaseFn classical_L2(const SeparableSystem& sys);

// A p1 p2 + B p1 + C p2 + D with ℋ^j 𝓛2^k substituted for the parameters.
PhaseFn expand_params_classical(const CanonicalOp& c, const SeparableSystem& sys);

// Top-weight part of the symbol (∂ → p) of d, weighting p1^m p2^n α^j by m + n + 2j.
PhaseFn classical_limit(const DiffOp& d);

}  // namespace superint
