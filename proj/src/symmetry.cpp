#include "superint/symmetry.hpp"

namespace superint {

namespace {

const ParamRatFn kH = ParamRatFn::var(Var::H);
const ParamRatFn kL2 = ParamRatFn::var(Var::L2);
const ParamRatFn kTwo(2);
const ParamRatFn kHalf(Rational(1, 2));

FunElement d1(const FunElement& f) { return f.diff(Coord::U1); }
FunElement d2(const FunElement& f) { return f.diff(Coord::U2); }
FunElement lap(const FunElement& f) { return d1(d1(f)) + d2(d2(f)); }

struct DefiningEqs {
  FunElement two_d1, two_d2;  // 2∂1D and 2∂2D
};

// The ∂1 and ∂2 equations solved for 2∂1D and 2∂2D.
DefiningEqs defining(const AbcParts& x, const SeparableSystem& s, Variant v) {
  FunElement A1 = d1(x.A), A2 = d2(x.A);
  FunElement v1p = d1(s.v1), v2p = d2(s.v2), f1p = d1(s.f1), f2p = d2(s.f2);
  FunElement rx = -(A2 * s.v2 * kTwo) - x.A * v2p + (A2 * s.f2 * kTwo + x.A * f2p) * kH - A2 * (kTwo * kL2);
  FunElement ry = -(A1 * s.v1 * kTwo) - x.A * v1p + (A1 * s.f1 * kTwo + x.A * f1p) * kH + A1 * (kTwo * kL2);
  if (v == Variant::Quantum) {
    rx += lap(x.B);
    ry += lap(x.C);
  }
  return {-rx, -ry};
}

// Constant-term equation without the Laplacian of D.
FunElement const_eq_core(const AbcParts& x, const SeparableSystem& s) {
  FunElement B1 = d1(x.B), C2 = d2(x.C);
  FunElement v1p = d1(s.v1), v2p = d2(s.v2), f1p = d1(s.f1), f2p = d2(s.f2);
  return -(B1 * s.v1 * kTwo) - C2 * s.v2 * kTwo - x.B * v1p - x.C * v2p +
         (B1 * s.f1 * kTwo + C2 * s.f2 * kTwo + x.B * f1p + x.C * f2p) * kH + (B1 - C2) * (kTwo * kL2);
}

}  // namespace

const char* variant_name(Variant v) { return v == Variant::Quantum ? "quantum" : "classical"; }

bool ResidualReport::is_zero() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

AbcParts assemble_abc(const PotentialPair& p) {
  if (p.variant == Variant::Quantum)
    return {p.F, -(d2(p.F) * kHalf) - d1(p.G), -(d1(p.F) * kHalf) + d2(p.G)};
  return {p.F, -d1(p.G), d2(p.G)};
}

ResidualReport residuals_fg(const PotentialPair& p, const SeparableSystem& sys) {
  AbcParts x = assemble_abc(p);
  DefiningEqs e = defining(x, sys, p.variant);
  FunElement integrability = d2(e.two_d1) - d1(e.two_d2);
  FunElement cterm = const_eq_core(x, sys);
  if (p.variant == Variant::Quantum) cterm += (d1(e.two_d1) + d2(e.two_d2)) * kHalf;
  return {{"integrability", "constant-term"}, {integrability, cterm}};
}

FunElement integrate_d(const AbcParts& abc, const SeparableSystem& sys, Variant variant) {
  DefiningEqs e = defining(abc, sys, variant);
  FunElement part1 = (e.two_d1 * kHalf).antidiff(Coord::U1);
  FunElement rest = e.two_d2 * kHalf - d2(part1);
  if (rest.depends_on(Coord::U1)) throw IntegrabilityError("integrate_d: defining equations are incompatible", rest);
  return part1 + rest.antidiff(Coord::U2);
}

CanonicalOp build_canonical(const PotentialPair& p, const SeparableSystem& sys) {
  AbcParts x = assemble_abc(p);
  FunElement D = integrate_d(x, sys, p.variant);
  return {x.A, x.B, x.C, D};
}

ResidualReport residuals_abcd(const CanonicalOp& c, const SeparableSystem& sys, Variant variant) {
  AbcParts x{c.A, c.B, c.C};
  FunElement rxy = (d2(c.B) + d1(c.C)) * kTwo;
  DefiningEqs e = defining(x, sys, variant);
  FunElement rx = d1(c.D) * kTwo - e.two_d1;
  FunElement ry = d2(c.D) * kTwo - e.two_d2;
  FunElement rc = const_eq_core(x, sys);
  if (variant == Variant::Quantum) {
    rxy += lap(c.A);
    rc += lap(c.D);
  }
  return {{"d1d2", "d1", "d2", "constant"}, {rxy, rx, ry, rc}};
}

}  // namespace superint
