#include "superint/goldens.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "superint/exact_matrix.hpp"
#include "superint/k3_operators.hpp"
#include "superint/phase.hpp"
#include "superint/pipeline.hpp"

namespace superint {

namespace {

const ParamRatFn kH = ParamRatFn::var(Var::H), kL2 = ParamRatFn::var(Var::L2), kAl = ParamRatFn::var(Var::Alpha),
                 kBe = ParamRatFn::var(Var::Beta), kGa = ParamRatFn::var(Var::Gamma);

Check check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

ParamRatFn quad(int c2, int c1, int c0) { return kL2 * kL2 * c2 + kL2 * c1 + c0; }

FunElement e13(long a, int b, int c, const ParamRatFn& coef) {
  return FunElement::trig_term(Rational(1, 3), Rational(a), b, c, coef);
}

ParamRatFn gauss(Rational re, Rational im) { return ParamRatFn(GaussRational(std::move(re), std::move(im))); }

}  // namespace

bool all_ok(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

TtwReferenceK13 ttw_reference_k13() {
  ParamRatFn gm = kGa - kBe, gp = kGa + kBe, gm2 = gm * gm;
  TtwReferenceK13 ex;
  ex.A = e13(-1, 3, 0, quad(81, 765, 274) * 8) + e13(-1, 1, 1, -gm * (kL2 * 9 + 26) * 144) +
         e13(-1, 1, 0, ((kL2 * 9 + 23) * gp * 6 - gm2 * 81 - quad(81, 765, 274)) * 6);
  ex.B = e13(-1, 2, 1, quad(81, 135, 8) * 40) + e13(-1, 2, 0, (kL2 * 144 + 101) * gm * 48) +
         e13(-1, 0, 1, (kL2 * 315 + 229) * gp * 12 - gm2 * 2754 - quad(810, 1350, 80)) +
         e13(-1, 0, 0, (gm * gp * 162 - (kL2 * 450 + 319) * gm) * 12);
  ex.C = e13(-1, 3, 0, -quad(81, 135, 8) * 40) + e13(-1, 1, 1, (kL2 * 27 + 8) * gm * 144) +
         e13(-1, 1, 0, (-(kL2 * 27 + 5) * gp * 6 + gm2 * 81 + quad(405, 675, 40)) * 6) +
         e13(0, 3, 0, -kH * (kL2 * 18 + 13) * 72) + e13(0, 1, 1, kH * gm * 1296) +
         e13(0, 1, 0, kH * (-gp * 6 + kL2 * 18 + 13) * 54);
  // cos(2u2/3) = c, cos(4u2/3) = 1 − 2s², cos(2u2) = c(1 − 4s²)
  FunElement c = e13(0, 0, 1, 1), cos4 = e13(0, 0, 0, 1) - e13(0, 2, 0, 2), cos6 = e13(0, 0, 1, 1) - e13(0, 2, 1, 4);
  FunElement e = e13(-1, 0, 0, 1);
  FunElement d = c * e * -(quad(81, 423, 40) * gp * 12 - (kL2 * 9 + 8) * gm2 * 162);
  d += cos4 * e * ((kL2 * 9 + 40) * (kL2 * 9 + 1) * gm * 12);
  d += cos6 * e * (quad(81, 765, 274) * kL2 * 2);
  d += e * ((kL2 * -27 - 23) * gm * gp * 36 + gm2 * gm * 162 + quad(81, 441, 40) * gm * 6);
  d += c * (kH * (-(kL2 * 3 + 7) * gp * 2 + gm2 * 9) * 81);
  d += cos4 * (kH * (kL2 + 2) * gm * 486);
  d += cos6 * (kH * quad(81, 441, 40));
  ex.D = d;
  ex.value_a = quad(81, 765, 274) * 8;
  ex.value_b = kH * (kL2 * 18 + 13) * 36;
  return ex;
}

std::array<ParamRatFn, 2> ttw_free_for(long p, long q, Cell c1, int i1, const ParamRatFn& v1, Cell c2, int i2,
                                       const ParamRatFn& v2) {
  LatticeState4 x = lattice_fill_ttw(p, q, {1, 0}), y = lattice_fill_ttw(p, q, {0, 1});
  ExactMatrix m{{x.at(c1.first, c1.second)[i1], y.at(c1.first, c1.second)[i1]},
                {x.at(c2.first, c2.second)[i2], y.at(c2.first, c2.second)[i2]}};
  auto s = solve_linear(m, {v1, v2});
  return {s[0], s[1]};
}

CheckList golden_cartesian_k3_classical() {
  Construction c = construct({SystemKind::Cartesian, Rational(3), Variant::Classical, std::nullopt});
  FunElement e3 = FunElement::exp_term(Rational(3), Rational(-3, 2), Rational(-3, 2));
  FunElement e1 = FunElement::exp_term(Rational(3), Rational(-1, 2), Rational(-3, 2));
  FunElement F = e3 * kL2 + e1 * (kH * Rational(1, 4));
  FunElement G = e3 * kL2 + e1 * (kH * Rational(3, 4));
  FunElement D = e3 * (gauss(0, 1) * kL2 * kL2) + e1 * (gauss(0, Rational(3, 4)) * kH * kL2);
  Verification v = verify_operator(c.op, c.sys, Variant::Classical, true);
  return {check("seed (1, 1), scale L2", c.scale == kL2.num(), "scale " + c.scale.str()),
          check("F = L2 e^{-3R-3iθ} + (1/4) H e^{-R-3iθ}", c.fg.F == F, c.fg.F.str()),
          check("G = L2 e^{-3R-3iθ} + (3/4) H e^{-R-3iθ}", c.fg.G == G, c.fg.G.str()),
          check("D = (i/4) L2 (4 L2 + 3 e^{2R} H) e^{-3R-3iθ}", c.op.D == D, c.op.D.str()),
          check("classical residuals and Poisson bracket with H vanish", v.ok())};
}

CheckList golden_cartesian_k3_quantum() {
  Construction c = construct({SystemKind::Cartesian, Rational(3), Variant::Quantum, std::nullopt});
  Verification v = verify_operator(c.op, c.sys, Variant::Quantum, true);
  return {check("quantum k = 3 residuals vanish", v.residuals.is_zero()),
          check("quantum k = 3 expanded operator commutes with H", v.commutes.value_or(false),
                "order " + std::to_string(c.order))};
}

CheckList golden_ttw_k2() {
  LatticeState4 s = lattice_fill_ttw(2, 1, {(kGa - kBe) * 4, -kL2 * 8 - 28});
  return {check("free columns are components 2 and 4", s.free_columns == std::array<size_t, 2>{1, 3}),
          check("C_{-2,1} = (-44 - 4L2, 4(γ-β), 0, -28 - 8L2)",
                s.at(-2, 1) == Vec4{-kL2 * 4 - 44, (kGa - kBe) * 4, 0, -kL2 * 8 - 28}),
          check("C_{-1,1} = (-2H, 0, 0, -4H)", s.at(-1, 1) == Vec4{-kH * 2, 0, 0, -kH * 4}),
          check("C_{0,1} = (0, 0, 0, 2α)", s.at(0, 1) == Vec4{0, 0, 0, kAl * 2}),
          check("no other nonzero vectors", s.entries.size() == 3),
          check("boundary conditions", boundary_check(s).ok())};
}

CheckList golden_ttw_k13(bool full_commutator) {
  TtwReferenceK13 ex = ttw_reference_k13();
  auto free = ttw_free_for(1, 3, {-1, 3}, 0, ex.value_a, {0, 3}, 3, ex.value_b);
  LatticeState4 s = lattice_fill_ttw(1, 3, free);
  std::set<Cell> support;
  for (const auto& [cell, v] : s.entries) support.insert(cell);
  SeparableSystem sys = ttw_system(Rational(1, 3));
  CanonicalOp op = build_canonical(build_fg_ttw(s), sys);
  auto sw = [](const FunElement& f) { return f.swap_params(Var::Beta, Var::Gamma); };
  FunElement dd = ex.D - sw(op.D);
  bool constant = dd.is_constant() || dd.is_zero();
  CheckList out{
      check("support {(-1,1), (-1,3), (0,1), (0,3)}", support == std::set<Cell>{{-1, 1}, {-1, 3}, {0, 1}, {0, 3}}),
      check("entries polynomial with the reference free values",
            std::all_of(s.entries.begin(), s.entries.end(),
                        [](const auto& kv) {
                          return std::all_of(kv.second.begin(), kv.second.end(),
                                             [](const ParamRatFn& x) { return x.is_polynomial(); });
                        })),
      check("A matches the reference", sw(op.A) == ex.A),
      check("B matches the reference", sw(op.B) == ex.B),
      check("C matches the reference", sw(op.C) == ex.C),
      check("D matches the reference up to the discarded integration constant", constant,
            "discarded constant " + (dd.is_zero() ? std::string("0") : dd.str())),
      check("order 6", symmetry_order(op) == 6, "order " + std::to_string(symmetry_order(op)))};
  Verification v = verify_operator(op, sys, Variant::Quantum, full_commutator);
  out.push_back(check("residuals vanish", v.residuals.is_zero()));
  if (full_commutator) out.push_back(check("expanded operator commutes with H", v.commutes.value_or(false)));
  return out;
}

CheckList golden_det_identity(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), kn(1, 9);
  int mismatches = 0;
  for (int n = 0; n < samples; ++n) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), k(kn(rng), den(rng));
    ParamRatFn closed = det_m_closed(a, b, k);
    ExactMatrix m = matrix_m({0, 0}, a, b, k);
    if (det_cofactor(m) != closed || det_bareiss(m) != closed) ++mismatches;
  }
  return {check("det M_{a,b} = closed form on " + std::to_string(samples) + " samples", mismatches == 0,
                std::to_string(mismatches) + " mismatches")};
}

CheckList golden_k3_algebra() {
  K3Operators k = k3_operators();
  return {check("[K1, H] = 0", commutator(k.K1, k.H).is_zero()),
          check("[K2, H] = 0", commutator(k.K2, k.H).is_zero()),
          check("[K3, H] = 0", commutator(k.K3, k.H).is_zero()),
          check("[K1, K3] = 6i K2 - 9 K1",
                commutator(k.K1, k.K3) == k.K2 * ParamRatFn(GaussRational(0, 6)) - k.K1 * ParamRatFn(9))};
}

CheckList k3_classical_comparisons(const CanonicalOp& op) {
  SeparableSystem sys = cartesian_system(Rational(3));
  K3Operators k = k3_operators();
  FunElement z = op.A.zero();
  PhaseFn even = expand_params_classical({op.A, z, z, op.D}, sys);
  PhaseFn odd = expand_params_classical({z, op.B, op.C, z}, sys);
  PhaseFn k1 = classical_limit(k.K1), k2 = classical_limit(k.K2);
  auto times = [&sys](const PhaseFn& f, const Rational& c) { return f.lmul(sys.one() * ParamRatFn(c)); };
  bool shown_even = even == times(k1, Rational(3, 4)), shown_odd = odd == times(k2, Rational(1, 4));
  std::string shown = std::string("stated pairing (A p_R p_θ + D = (3/4) K1, B p_R + C p_θ = (1/4) K2): ") +
                      (shown_even && shown_odd ? "holds" : "does not hold");
  return {check("B p_R + C p_θ = (3/4) K1, K1 the classical limit of the third-order operator",
                odd == times(k1, Rational(3, 4)), shown),
          check("A p_R p_θ + D = (1/4) K2, K2 the classical limit of the fourth-order operator",
                even == times(k2, Rational(1, 4)), shown)};
}

}  // namespace superint
