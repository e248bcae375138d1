#include "superint/param_ratfn.hpp"

#include <stdexcept>

#include "superint/poly_ops.hpp"

namespace superint {

ParamRatFn ParamRatFn::make(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("ParamRatFn: zero denominator");
  ParamRatFn r;
  if (num.is_zero()) return r;
  if (den.is_constant()) {
    r.num_ = std::move(num) * (GaussRational(1) / den.constant_value());
    return r;
  }
  ParamPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  GaussRational lc = den.lead().c;
  if (!lc.is_one()) {
    GaussRational inv = GaussRational(1) / lc;
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

ParamRatFn ParamRatFn::operator-() const {
  ParamRatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamRatFn& ParamRatFn::operator*=(const GaussRational& c) {
  num_ *= c;
  return *this;
}

// Caller guarantees coprime num/den with den monic.
ParamRatFn reduced_unchecked(ParamPoly num, ParamPoly den) {
  ParamRatFn r;
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

static ParamRatFn add_impl(const ParamRatFn& a, const ParamRatFn& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  auto combine = [subtract](const ParamPoly& x, const ParamPoly& y) { return subtract ? x - y : x + y; };
  if (a.is_polynomial() && b.is_polynomial()) return ParamRatFn(combine(a.num(), b.num()));
  if (a.den() == b.den()) return ParamRatFn::make(combine(a.num(), b.num()), a.den());
  if (a.is_polynomial() || b.is_polynomial()) {
    // p + n/d = (p*d + n)/d is already reduced
    const ParamPoly& d = a.is_polynomial() ? b.den() : a.den();
    ParamPoly n = a.is_polynomial() ? combine(a.num() * d, b.num()) : combine(a.num(), b.num() * d);
    return reduced_unchecked(std::move(n), d);
  }
  ParamPoly g = gcd(a.den(), b.den());
  ParamPoly da = exact_quotient(a.den(), g), db = exact_quotient(b.den(), g);
  ParamPoly n = combine(a.num() * db, b.num() * da);
  ParamPoly d = a.den() * db;
  if (g.is_one()) return reduced_unchecked(std::move(n), std::move(d));
  // Henrici: only factors of g can cancel
  ParamPoly g2 = gcd(n, g);
  if (!g2.is_one()) {
    n = exact_quotient(n, g2);
    d = exact_quotient(d, g2);
  }
  return reduced_unchecked(std::move(n), std::move(d));
}

ParamRatFn operator+(const ParamRatFn& a, const ParamRatFn& b) { return add_impl(a, b, false); }
ParamRatFn operator-(const ParamRatFn& a, const ParamRatFn& b) { return add_impl(a, b, true); }

ParamRatFn operator*(const ParamRatFn& a, const ParamRatFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return ParamRatFn(a.num() * b.num());
  if (b.is_constant()) return ParamRatFn(a) *= b.constant_value();
  if (a.is_constant()) return ParamRatFn(b) *= a.constant_value();
  ParamPoly an = a.num(), bn = b.num(), ad = a.den(), bd = b.den();
  auto cancel = [](ParamPoly& n, ParamPoly& d) {
    if (d.is_one()) return;
    if (auto q = divide_exact(n, d)) {
      n = std::move(*q);
      d = ParamPoly(1);
      return;
    }
    ParamPoly g = gcd(n, d);
    if (!g.is_one()) n = exact_quotient(n, g), d = exact_quotient(d, g);
  };
  cancel(an, bd);
  cancel(bn, ad);
  return reduced_unchecked(an * bn, ad * bd);
}

ParamRatFn ParamRatFn::inverse() const {
  if (is_zero()) throw std::domain_error("ParamRatFn: division by zero");
  ParamRatFn r;
  GaussRational inv = GaussRational(1) / num_.lead().c;
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  return r;
}

ParamRatFn operator/(const ParamRatFn& a, const ParamRatFn& b) {
  if (b.is_zero()) throw std::domain_error("ParamRatFn: division by zero");
  if (b.is_constant()) return ParamRatFn(a) *= GaussRational(1) / b.constant_value();
  return a * b.inverse();
}

ParamRatFn ParamRatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ParamRatFn r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

ParamRatFn ParamRatFn::swap_vars(Var x, Var y) const {
  return make(num_.swap_vars(x, y), den_.swap_vars(x, y));
}

std::string ParamRatFn::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ParamRatFn& r) { return os << r.str(); }

}  // namespace superint
