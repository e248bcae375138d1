#include "superint/pipeline.hpp"

#include "superint/engine_cartesian.hpp"
#include "superint/engine_ttw.hpp"
#include "superint/phase.hpp"
#include "superint/poly_ops.hpp"

namespace superint {

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ConfigError("k is too large");
  return z.get_si();
}

ParamPoly entry_lcm(const LatticeState4& s) {
  ParamPoly out(1);
  for (const auto& [cell, v] : s.entries)
    for (const auto& x : v) out = lcm(out, x.den());
  return out;
}

}  // namespace

const char* system_name(SystemKind s) { return s == SystemKind::Cartesian ? "cartesian" : "ttw"; }

void validate(const JobConfig& cfg) {
  if (cfg.k.is_zero()) throw ConfigError("k must be nonzero");
  if (cfg.system == SystemKind::Ttw) {
    if (cfg.variant == Variant::Classical) throw ConfigError("out of scope: the classical TTW construction is not provided");
    if (cfg.k.sign() < 0) throw ConfigError("ttw requires k > 0");
  }
  to_long(cfg.k.num());
  to_long(cfg.k.den());
}

SeparableSystem system_for(SystemKind s, const Rational& k) {
  return s == SystemKind::Cartesian ? cartesian_system(k) : ttw_system(k);
}

Construction construct(const JobConfig& cfg) {
  validate(cfg);
  Construction c;
  c.cfg = cfg;
  c.sys = system_for(cfg.system, cfg.k);
  long p = to_long(abs(cfg.k.num())), q = to_long(cfg.k.den());
  if (cfg.system == SystemKind::Cartesian) {
    int sign = cfg.k.sign();
    c.seed = cfg.seed.value_or(std::array<ParamRatFn, 2>{1, 1});
    auto [scale, cleared] = clear_denominators(lattice_fill(p, q, sign, cfg.variant, {c.seed[0], c.seed[1]}));
    c.scale = scale;
    c.fg = build_fg(cleared);
    c.fg.variant = cfg.variant;
  } else {
    LatticeState4 s;
    if (cfg.seed) {
      c.seed = *cfg.seed;
      c.scale = entry_lcm(lattice_fill_ttw(p, q, c.seed));
      ParamRatFn k(c.scale);
      s = lattice_fill_ttw(p, q, {c.seed[0] * k, c.seed[1] * k});
    } else {
      TtwClearing t = clear_denominators_ttw(p, q);
      c.seed = t.free;
      c.scale = ParamPoly(1);
      s = std::move(t.state);
    }
    c.fg = build_fg_ttw(s);
  }
  c.op = build_canonical(c.fg, c.sys);
  c.order = symmetry_order(c.op);
  return c;
}

Verification verify_operator(const CanonicalOp& op, const SeparableSystem& sys, Variant v, bool full_commutator) {
  Verification out{residuals_abcd(op, sys, v), std::nullopt};
  if (full_commutator) {
    if (v == Variant::Quantum)
      out.commutes = commutator(expand_params(op, sys), build_H(sys)).is_zero();
    else
      out.commutes = poisson_bracket(expand_params_classical(op, sys), classical_H(sys)).is_zero();
  }
  return out;
}

}  // namespace superint
