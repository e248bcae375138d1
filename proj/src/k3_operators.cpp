#include "superint/k3_operators.hpp"

namespace superint {

K3Operators k3_operators() {
  const Rational k(3);
  SeparableSystem sys = cartesian_system(k);
  const GaussRational i = GaussRational::i();
  const ParamRatFn alpha = ParamRatFn::var(Var::Alpha);
  auto e = [&k](Rational a, Rational t, ParamRatFn c = 1) { return FunElement::exp_term(k, a, t, c); };
  auto m = [](const FunElement& f) { return DiffOp::mult(f); };
  auto d = [&k](int p, int q) { return DiffOp::d(Ring::Exp, k, p, q); };
  auto c = [](GaussRational g) { return ParamRatFn(g); };
  const Rational h(1, 2);

  FunElement X = e(h, h, c(h)) + e(h, -h, c(h));
  FunElement Y = e(h, h, c(GaussRational(0, -h))) + e(h, -h, c(GaussRational(0, h)));
  FunElement cosr = e(-h, h, c(h)) + e(-h, -h, c(h));                             // e^{−R} cos θ
  FunElement sinr = e(-h, h, c(GaussRational(0, -h))) + e(-h, -h, c(GaussRational(0, h)));  // e^{−R} sin θ
  DiffOp Dx = compose(m(cosr), d(1, 0)) - compose(m(sinr), d(0, 1));
  DiffOp Dy = compose(m(sinr), d(1, 0)) + compose(m(cosr), d(0, 1));
  DiffOp P = Dx - Dy * c(i);
  DiffOp P3 = compose(P, compose(P, P));
  FunElement Z = e(Rational(-3, 2), Rational(3, 2));
  FunElement aZ = Z * alpha;
  FunElement iY = Y * c(i);

  DiffOp K1 = P3 + (compose(m(-(iY + X * 3)), Dx) + compose(m((iY * 3 + X) * c(i)), Dy)).lmul(aZ);

  DiffOp rot = compose(m(X), Dy) - compose(m(Y), Dx);
  DiffOp bracket = compose(m((Y * Y * 2 - X * Y * c(GaussRational(0, 3)) - X * X * 3) * c(i)), compose(Dx, Dx)) -
                   compose(m((iY * 3 + X) * (iY + X * 3)), compose(Dx, Dy)) +
                   compose(m((X * X * 2 + X * Y * c(GaussRational(0, 3)) - Y * Y * 3) * c(i)), compose(Dy, Dy)) -
                   compose(m((iY * 3 + X) * c(GaussRational(0, 2))), Dx) - compose(m((iY + X * 3) * 2), Dy) -
                   m(sys.one() * c(GaussRational(0, 8)));
  DiffOp K2 = compose(rot, P3) + bracket.lmul(aZ) + m(e(Rational(-3, 2), Rational(9, 2), alpha * alpha * c(i)));

  DiffOp K3 = compose(rot, rot) + m(Y * (X * X * 3 - Y * Y) * Z * (alpha * c(GaussRational(0, 2))));

  return {sys, build_H(sys), K1, K2, K3};
}

}  // namespace superint
