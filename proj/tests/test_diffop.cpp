#include <random>

#include "doctest.h"
#include "superint/canonical.hpp"
#include "superint/k3_operators.hpp"
#include "superint/phase.hpp"
#include "test_support.hpp"

using namespace superint;
using namespace superint::testing;

namespace {

DiffOp random_op(std::mt19937& rng, const SeparableSystem& sys, int max_order) {
  DiffOp r(sys.ring, sys.k);
  int n = 1 + rng() % 3;
  for (int i = 0; i < n; ++i) {
    int m = rng() % (max_order + 1);
    int q = rng() % (max_order - m + 1);
    r.add_term(m, q, random_fun(rng, sys.ring, sys.k, 2));
  }
  return r;
}

std::vector<SeparableSystem> systems() { return {cartesian_system(Rational(3)), ttw_system(Rational(1, 3))}; }

}  // namespace

TEST_SUITE("diffop-algebra") {

TEST_CASE("Leibniz and identity") {
  SeparableSystem sys = cartesian_system(Rational(2));
  FunElement f = FunElement::exp_term(sys.k, Rational(3, 2), 0, H);
  DiffOp d1 = DiffOp::d(sys.ring, sys.k, 1, 0);
  CHECK(compose(d1, DiffOp::mult(f)) == compose(DiffOp::mult(f), d1) + DiffOp::mult(f.diff(Coord::U1)));
  DiffOp h = build_H(sys);
  CHECK(compose(h, DiffOp::d(sys.ring, sys.k, 0, 0)) == h);
  CHECK(commutator(h, h).is_zero());
  CHECK(commutator(d1, h) == h * ParamRatFn(-2));
}

TEST_CASE("system operators") {
  SeparableSystem c = cartesian_system(Rational(3));
  FunElement em2 = FunElement::exp_term(c.k, -1, 0);
  DiffOp expect_h = (DiffOp::d(c.ring, c.k, 2, 0) + DiffOp::d(c.ring, c.k, 0, 2) +
                     DiffOp::mult(FunElement::exp_term(c.k, 0, 3, al)))
                        .lmul(em2);
  CHECK(build_H(c) == expect_h);
  CHECK(build_L2(c) == -(DiffOp::d(c.ring, c.k, 0, 2) + DiffOp::mult(FunElement::exp_term(c.k, 0, 3, al))));
  SeparableSystem t = ttw_system(Rational(2));
  FunElement v2 = FunElement::trig_term(t.k, 0, -2, 0, ParamRatFn(2) * (ga + be)) +
                  FunElement::trig_term(t.k, 0, -2, 1, ParamRatFn(2) * (ga - be));
  DiffOp expect_t = (DiffOp::d(t.ring, t.k, 2, 0) + DiffOp::d(t.ring, t.k, 0, 2) +
                     DiffOp::mult(FunElement::trig_term(t.k, 2, 0, 0, al) + v2))
                        .lmul(FunElement::trig_term(t.k, -1, 0, 0));
  CHECK(build_H(t) == expect_t);
  CHECK_THROWS(make_system("bad", c.f1, c.f2, c.v2, c.v1));
}

TEST_CASE("bracket identities and [H, L2] = 0") {
  for (const auto& sys : systems()) {
    DiffOp h = build_H(sys), l2 = build_L2(sys);
    FunElement w = sys.inv_f();
    DiffOp d1 = DiffOp::d(sys.ring, sys.k, 1, 0), d2 = DiffOp::d(sys.ring, sys.k, 0, 1);
    FunElement f1p = sys.f1.diff(Coord::U1), v1p = sys.v1.diff(Coord::U1);
    FunElement f2p = sys.f2.diff(Coord::U2), v2p = sys.v2.diff(Coord::U2);
    CHECK(commutator(d1, h) == h.lmul(-(w * f1p)) + DiffOp::mult(w * v1p));
    CHECK(commutator(d2, h) == h.lmul(-(w * f2p)) + DiffOp::mult(w * v2p));
    CHECK(commutator(d1, l2) == (DiffOp::mult(v1p) - h.lmul(f1p)).lmul(w * sys.f2));
    CHECK(commutator(d2, l2) == (h.lmul(f2p) - DiffOp::mult(v2p)).lmul(w * sys.f1));
    CHECK(commutator(h, l2).is_zero());
  }
}

TEST_CASE("associativity and Jacobi on random operators") {
  std::mt19937 rng(4);
  for (const auto& sys : systems())
    for (int n = 0; n < 15; ++n) {
      DiffOp x = random_op(rng, sys, 2), y = random_op(rng, sys, 2), z = random_op(rng, sys, 2);
      CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
      CHECK(commutator(x, y) == -commutator(y, x));
      DiffOp jac = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
      CHECK(jac.is_zero());
    }
}

TEST_CASE("canonical reduction examples") {
  for (const auto& sys : systems()) {
    CanonicalOp r = canonical_reduce(DiffOp::d(sys.ring, sys.k, 2, 0), sys);
    CHECK(r.A.is_zero());
    CHECK(r.B.is_zero());
    CHECK(r.C.is_zero());
    CHECK(r.D == sys.f1 * H + FunElement(sys.ring, sys.k, L2) - sys.v1);
    CanonicalOp rh = canonical_reduce(build_H(sys), sys);
    CHECK(rh == CanonicalOp{sys.zero(), sys.zero(), sys.zero(), FunElement(sys.ring, sys.k, H)});
    CanonicalOp rl = canonical_reduce(build_L2(sys), sys);
    CHECK(rl == CanonicalOp{sys.zero(), sys.zero(), sys.zero(), FunElement(sys.ring, sys.k, L2)});
  }
}

TEST_CASE("reduction is confluent and idempotent") {
  std::mt19937 rng(12);
  for (const auto& sys : systems()) {
    Reducer r1(sys, ReduceOrder::D1First), r2(sys, ReduceOrder::D2First);
    for (int n = 0; n < 20; ++n) {
      DiffOp x = random_op(rng, sys, 6);
      CanonicalOp c = r1.reduce(x);
      CHECK(c == r2.reduce(x));
      CHECK(r1.reduce(to_diffop(c, sys)) == c);
    }
  }
}

TEST_CASE("expand_params inverts reduction") {
  for (const auto& sys : systems()) {
    ParamExpander ex(sys);
    Reducer red(sys);
    DiffOp h = build_H(sys), l2 = build_L2(sys);
    for (const DiffOp& x : {h, l2, compose(h, l2), compose(l2, l2)}) CHECK(ex.expand(red.reduce(x)) == x);
    CHECK(ex.expand(CanonicalOp{sys.zero(), sys.zero(), sys.zero(), FunElement(sys.ring, sys.k, L2 * L2)}) ==
          compose(l2, l2));
    FunElement bad(sys.ring, sys.k, ParamRatFn(1) / (L2 + 1));
    CHECK_THROWS_AS(ex.expand(CanonicalOp{sys.zero(), sys.zero(), sys.zero(), bad}), ParamDependenceError);
  }
  K3Operators k = k3_operators();
  CHECK(expand_params(canonical_reduce(k.K1, k.sys), k.sys) == k.K1);
}

TEST_CASE("symmetry order") {
  SeparableSystem sys = ttw_system(Rational(1, 3));
  FunElement one = sys.one();
  CanonicalOp c{one * (L2 * L2), one * H, sys.zero(), one * (H * L2)};
  CHECK(symmetry_order(c) == 6);
  CHECK(expand_params(c, sys).order() == 6);
  CHECK(symmetry_order(CanonicalOp{sys.zero(), sys.zero(), one, sys.zero()}) == 1);
}

TEST_CASE("k = 3 operator algebra") {
  K3Operators k = k3_operators();
  CHECK(commutator(k.K1, k.H).is_zero());
  CHECK(commutator(k.K2, k.H).is_zero());
  CHECK(commutator(k.K3, k.H).is_zero());
  CHECK(commutator(k.K1, k.K3) == k.K2 * ParamRatFn(GaussRational(0, 6)) - k.K1 * ParamRatFn(9));
  CHECK(commutator(k.K1, k.K2) == compose(k.K1, k.K1) * ParamRatFn(GaussRational(0, 3)));
}

TEST_CASE("Poisson bracket basics") {
  for (const auto& sys : systems()) {
    PhaseFn h = classical_H(sys), l2 = classical_L2(sys);
    CHECK(poisson_bracket(h, l2).is_zero());
    PhaseFn p1 = PhaseFn::p(sys.ring, sys.k, 1, 0);
    PhaseFn u = PhaseFn::fn(sys.f1);
    CHECK(poisson_bracket(u, p1) == PhaseFn::fn(sys.f1.diff(Coord::U1)));
  }
}

}
