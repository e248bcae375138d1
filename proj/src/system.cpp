#include "superint/system.hpp"

#include <stdexcept>

namespace superint {

FunElement SeparableSystem::inv_f() const { return (f1 + f2).inverse(); }

SeparableSystem make_system(std::string name, FunElement f1, FunElement f2, FunElement v1, FunElement v2) {
  SeparableSystem s{std::move(name), f1.ring(), f1.k(), std::move(f1), std::move(f2), std::move(v1), std::move(v2)};
  for (const FunElement* f : {&s.f1, &s.f2, &s.v1, &s.v2})
    if (f->ring() != s.ring) throw std::invalid_argument("system data in different rings");
  if (s.f1.depends_on(Coord::U2) || s.v1.depends_on(Coord::U2))
    throw std::invalid_argument("f1, v1 must depend on u1 only");
  if (s.f2.depends_on(Coord::U1) || s.v2.depends_on(Coord::U1))
    throw std::invalid_argument("f2, v2 must depend on u2 only");
  if ((s.f1 + s.f2).is_zero()) throw std::invalid_argument("f1 + f2 vanishes");
  return s;
}

SeparableSystem cartesian_system(const Rational& k) {
  FunElement f1 = FunElement::exp_term(k, 1, 0);
  FunElement zero(Ring::Exp, k);
  FunElement v2 = FunElement::exp_term(k, 0, k, ParamRatFn::var(Var::Alpha));
  return make_system("cartesian", f1, zero, zero, v2);
}

SeparableSystem ttw_system(const Rational& k) {
  FunElement f1 = FunElement::trig_term(k, 1, 0, 0);
  FunElement zero(Ring::Trig, k);
  FunElement v1 = FunElement::trig_term(k, 2, 0, 0, ParamRatFn::var(Var::Alpha));
  ParamRatFn b = ParamRatFn::var(Var::Beta), g = ParamRatFn::var(Var::Gamma);
  // 2(γ+β)/sin²(2kθ) + 2(γ−β)cos(2kθ)/sin²(2kθ)
  FunElement v2 = FunElement::trig_term(k, 0, -2, 0, ParamRatFn(2) * (g + b)) +
                  FunElement::trig_term(k, 0, -2, 1, ParamRatFn(2) * (g - b));
  return make_system("ttw", f1, zero, v1, v2);
}

DiffOp build_H(const SeparableSystem& sys) {
  DiffOp op = DiffOp::d(sys.ring, sys.k, 2, 0) + DiffOp::d(sys.ring, sys.k, 0, 2) + DiffOp::mult(sys.v1 + sys.v2);
  return op.lmul(sys.inv_f());
}

DiffOp build_L2(const SeparableSystem& sys) {
  DiffOp p1 = DiffOp::d(sys.ring, sys.k, 2, 0) + DiffOp::mult(sys.v1);
  DiffOp p2 = DiffOp::d(sys.ring, sys.k, 0, 2) + DiffOp::mult(sys.v2);
  return (p1.lmul(sys.f2) - p2.lmul(sys.f1)).lmul(sys.inv_f());
}

}  // namespace superint
