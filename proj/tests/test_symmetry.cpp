#include <random>

#include "doctest.h"
#include "superint/phase.hpp"
#include "superint/symmetry.hpp"
#include "test_support.hpp"

using namespace superint;
using namespace superint::testing;

namespace {

const Rational h(1, 2);

struct ClassicalK3 {
  SeparableSystem sys = cartesian_system(Rational(3));
  FunElement e3 = FunElement::exp_term(Rational(3), Rational(-3, 2), Rational(-3, 2));
  FunElement e1 = FunElement::exp_term(Rational(3), Rational(-1, 2), Rational(-3, 2));
  PotentialPair pair() const {
    return {e3 * L2 + e1 * (H * Rational(1, 4)), e3 * L2 + e1 * (H * Rational(3, 4)), Variant::Classical};
  }
};

}  // namespace

TEST_SUITE("symmetry-core") {

TEST_CASE("zero and constant inputs") {
  for (const auto& sys : {cartesian_system(Rational(3)), ttw_system(Rational(1, 3))})
    for (Variant v : {Variant::Quantum, Variant::Classical}) {
      PotentialPair z{sys.zero(), sys.zero(), v};
      CHECK(residuals_fg(z, sys).is_zero());
      AbcParts abc = assemble_abc(z);
      CHECK(abc.A.is_zero());
      CHECK(abc.B.is_zero());
      CHECK(abc.C.is_zero());
      CHECK(integrate_d(abc, sys, v).is_zero());
      CanonicalOp c{sys.zero(), sys.zero(), sys.zero(), sys.one() * (H * L2 + 3)};
      CHECK(residuals_abcd(c, sys, v).is_zero());
    }
}

TEST_CASE("classical k = 3 example") {
  ClassicalK3 ex;
  PotentialPair p = ex.pair();
  CHECK(residuals_fg(p, ex.sys).is_zero());
  AbcParts abc = assemble_abc(p);
  CHECK(abc.A == p.F);
  CHECK(abc.B == ex.e3 * (L2 * 3) + ex.e1 * (H * Rational(3, 4)));
  CHECK(abc.C == ex.e3 * (L2 * GaussRational(0, -3)) + ex.e1 * (H * GaussRational(0, Rational(-9, 4))));
  FunElement D = integrate_d(abc, ex.sys, Variant::Classical);
  FunElement expect = ex.e3 * (ParamRatFn(I) * L2 * L2) + ex.e1 * (ParamRatFn(GaussRational(0, Rational(3, 4))) * H * L2);
  CHECK(D == expect);
  CanonicalOp c{abc.A, abc.B, abc.C, D};
  CHECK(residuals_abcd(c, ex.sys, Variant::Classical).is_zero());
  CHECK_FALSE(residuals_abcd(c, ex.sys, Variant::Quantum).is_zero());
  PhaseFn l = expand_params_classical(c, ex.sys);
  CHECK(poisson_bracket(classical_H(ex.sys), l).is_zero());
  CHECK_FALSE(poisson_bracket(classical_L2(ex.sys), l).is_zero());
}

TEST_CASE("perturbing D leaves exactly the perturbation's residual") {
  ClassicalK3 ex;
  CanonicalOp c = build_canonical(ex.pair(), ex.sys);
  FunElement e2r = FunElement::exp_term(Rational(3), 1, 0);
  CanonicalOp bad = c;
  bad.D += e2r;
  ResidualReport r = residuals_abcd(bad, ex.sys, Variant::Quantum);
  ResidualReport r0 = residuals_abcd(c, ex.sys, Variant::Quantum);
  CHECK_FALSE(r.is_zero());
  CHECK(r.residuals[0] == r0.residuals[0]);
  CHECK(r.residuals[1] - r0.residuals[1] == e2r * 4);
  CHECK(r.residuals[2] == r0.residuals[2]);
  CHECK(r.residuals[3] - r0.residuals[3] == e2r * 4);
}

TEST_CASE("quantum minus classical residuals are the Laplacian terms") {
  std::mt19937 rng(17);
  for (const auto& sys : {cartesian_system(Rational(2, 3)), ttw_system(Rational(3, 2))})
    for (int n = 0; n < 20; ++n) {
      CanonicalOp c{random_fun(rng, sys.ring, sys.k), random_fun(rng, sys.ring, sys.k),
                    random_fun(rng, sys.ring, sys.k), random_fun(rng, sys.ring, sys.k)};
      auto lap = [](const FunElement& f) { return f.diff(Coord::U1, 2) + f.diff(Coord::U2, 2); };
      ResidualReport q = residuals_abcd(c, sys, Variant::Quantum), k = residuals_abcd(c, sys, Variant::Classical);
      CHECK(q.residuals[0] - k.residuals[0] == lap(c.A));
      CHECK(q.residuals[1] - k.residuals[1] == lap(c.B));
      CHECK(q.residuals[2] - k.residuals[2] == lap(c.C));
      CHECK(q.residuals[3] - k.residuals[3] == lap(c.D));
    }
}

TEST_CASE("integrate_d reports incompatible equations") {
  SeparableSystem sys = cartesian_system(Rational(3));
  // A = e^{−R+iθ} gives a non-integrable pair of defining equations
  AbcParts abc{FunElement::exp_term(sys.k, h, h), sys.zero(), sys.zero()};
  CHECK_THROWS(integrate_d(abc, sys, Variant::Quantum));
}

}
