#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "superint/param_ratfn.hpp"

namespace superint {

// exp: e^{2aR} e^{2itθ}.  trig: e^{2aR} sin^b(2kθ) cos^c(2kθ), c ∈ {0,1}.
enum class Ring { Exp, Trig };
enum class Coord { U1, U2 };

const char* ring_name(Ring r);

struct FunMonomial {
  Rational a;
  Rational t;  // exp ring only
  int b = 0;   // trig ring only
  int c = 0;   // trig ring only

  friend bool operator==(const FunMonomial&, const FunMonomial&) = default;
  friend std::strong_ordering operator<=>(const FunMonomial& x, const FunMonomial& y) {
    if (auto o = x.a <=> y.a; o != 0) return o;
    if (auto o = x.t <=> y.t; o != 0) return o;
    if (auto o = x.b <=> y.b; o != 0) return o;
    return x.c <=> y.c;
  }
  std::string str(Ring r) const;
};

struct RingMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotIntegrable : std::domain_error {
  using std::domain_error::domain_error;
};

class FunElement {
 public:
  using TermMap = std::map<FunMonomial, ParamRatFn>;

  FunElement() = default;
  FunElement(Ring ring, Rational k) : ring_(ring), k_(std::move(k)) {}
  FunElement(Ring ring, Rational k, const ParamRatFn& c);

  static FunElement exp_term(Rational k, Rational a, Rational t, const ParamRatFn& c = 1);
  static FunElement trig_term(Rational k, Rational a, int b, int c, const ParamRatFn& coef = 1);
  static FunElement from_terms(Ring ring, Rational k, TermMap terms);

  Ring ring() const { return ring_; }
  const Rational& k() const { return k_; }
  const TermMap& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool depends_on(Coord u) const;
  FunElement zero() const { return FunElement(ring_, k_); }
  FunElement one() const { return FunElement(ring_, k_, 1); }

  void add_term(const FunMonomial& m, const ParamRatFn& c);

  FunElement operator-() const;
  FunElement& operator+=(const FunElement& o);
  FunElement& operator-=(const FunElement& o);
  FunElement& operator*=(const ParamRatFn& c);
  friend FunElement operator+(FunElement x, const FunElement& y) { return x += y; }
  friend FunElement operator-(FunElement x, const FunElement& y) { return x -= y; }
  friend FunElement operator*(const FunElement& x, const FunElement& y);
  friend FunElement operator*(FunElement x, const ParamRatFn& c) { return x *= c; }
  friend FunElement operator*(const ParamRatFn& c, FunElement x) { return x *= c; }
  friend bool operator==(const FunElement& x, const FunElement& y);

  FunElement pow(unsigned e) const;
  FunElement diff(Coord u) const;
  FunElement diff(Coord u, unsigned times) const;
  // Antiderivative with zero integration constant; NotIntegrable otherwise.
  FunElement antidiff(Coord u) const;
  // Inverse of a single invertible monomial (no cosine factor).
  FunElement inverse() const;

  FunElement map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const;
  FunElement swap_params(Var x, Var y) const;

  std::string str() const;

 private:
  void check_ring(const FunElement& o) const;
  Ring ring_ = Ring::Exp;
  Rational k_ = Rational(1);
  TermMap t_;  // no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const FunElement& f);

}  // namespace superint
