#include "superint/canonical.hpp"

#include <vector>

namespace superint {

namespace {

long binom(int n, int i) {
  long r = 1;
  for (int j = 1; j <= i; ++j) r = r * (n - i + j) / j;
  return r;
}

const ParamRatFn kH = ParamRatFn::var(Var::H);
const ParamRatFn kL2 = ParamRatFn::var(Var::L2);

}  // namespace

CanonicalOp& CanonicalOp::operator+=(const CanonicalOp& o) {
  A += o.A;
  B += o.B;
  C += o.C;
  D += o.D;
  return *this;
}

CanonicalOp CanonicalOp::lmul(const FunElement& f) const { return {f * A, f * B, f * C, f * D}; }

CanonicalOp CanonicalOp::operator*(const ParamRatFn& c) const { return {A * c, B * c, C * c, D * c}; }

CanonicalOp CanonicalOp::map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const {
  return {A.map_coeffs(f), B.map_coeffs(f), C.map_coeffs(f), D.map_coeffs(f)};
}

const CanonicalOp& Reducer::basis(int m, int n) {
  auto key = std::make_pair(m, n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  CanonicalOp r = CanonicalOp::zero(sys_);
  bool use1 = m >= 2 && (order_ == ReduceOrder::D1First || n < 2);
  bool use2 = !use1 && n >= 2;
  if (use1) {
    // ∂1^{m−2}(f1 H + L2 − v1)∂2^n, moving ∂1^{m−2} past f1, v1 by Leibniz
    r += CanonicalOp(basis(m - 2, n)) * kL2;
    FunElement df = sys_.f1, dv = sys_.v1;
    for (int i = 0; i <= m - 2; ++i) {
      if (df.is_zero() && dv.is_zero()) break;
      ParamRatFn c(binom(m - 2, i));
      FunElement g = df * (c * kH) - dv * c;
      if (!g.is_zero()) r += basis(m - 2 - i, n).lmul(g);
      df = df.diff(Coord::U1);
      dv = dv.diff(Coord::U1);
    }
  } else if (use2) {
    // ∂1^m ∂2^{n−2}(f2 H − L2 − v2)
    r += CanonicalOp(basis(m, n - 2)) * -kL2;
    FunElement df = sys_.f2, dv = sys_.v2;
    for (int j = 0; j <= n - 2; ++j) {
      if (df.is_zero() && dv.is_zero()) break;
      ParamRatFn c(binom(n - 2, j));
      FunElement g = df * (c * kH) - dv * c;
      if (!g.is_zero()) r += basis(m, n - 2 - j).lmul(g);
      df = df.diff(Coord::U2);
      dv = dv.diff(Coord::U2);
    }
  } else {
    FunElement one = sys_.one();
    if (m == 1 && n == 1) r.A = one;
    else if (m == 1) r.B = one;
    else if (n == 1) r.C = one;
    else r.D = one;
  }
  return memo_.emplace(key, std::move(r)).first->second;
}

CanonicalOp Reducer::reduce(const DiffOp& x) {
  CanonicalOp r = CanonicalOp::zero(sys_);
  for (const auto& [mn, f] : x.terms()) r += basis(mn.first, mn.second).lmul(f);
  return r;
}

CanonicalOp canonical_reduce(const DiffOp& x, const SeparableSystem& sys, ReduceOrder order) {
  return Reducer(sys, order).reduce(x);
}

DiffOp to_diffop(const CanonicalOp& c, const SeparableSystem& sys) {
  DiffOp r(sys.ring, sys.k);
  r.add_term(1, 1, c.A);
  r.add_term(1, 0, c.B);
  r.add_term(0, 1, c.C);
  r.add_term(0, 0, c.D);
  return r;
}

std::map<std::pair<int, int>, FunElement> split_params(const FunElement& f) {
  std::map<std::pair<int, int>, FunElement> out;
  const uint64_t uh = mono::unit(Var::H), ul = mono::unit(Var::L2);
  for (const auto& [m, c] : f.terms()) {
    if (c.den().depends_on(Var::H) || c.den().depends_on(Var::L2))
      throw ParamDependenceError("coefficient denominator depends on H or L2; clear denominators first: " +
                                 c.str());
    std::map<std::pair<int, int>, std::vector<ParamPoly::Term>> parts;
    for (const auto& t : c.num().terms()) {
      int j = mono::exponent(t.key, Var::H), k = mono::exponent(t.key, Var::L2);
      parts[{j, k}].push_back({t.key - j * uh - k * ul, t.c});
    }
    for (auto& [jk, ts] : parts) {
      ParamRatFn coef = ParamRatFn::make(ParamPoly::from_terms(std::move(ts)), c.den());
      auto [it, fresh] = out.try_emplace(jk, f.ring(), f.k());
      it->second.add_term(m, coef);
    }
  }
  return out;
}

ParamExpander::ParamExpander(SeparableSystem sys)
    : sys_(std::move(sys)), h_(build_H(sys_)), l2_(build_L2(sys_)) {}

const DiffOp& ParamExpander::hl_power(int j, int k) {
  auto key = std::make_pair(j, k);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  DiffOp r = j == 0 && k == 0 ? DiffOp::d(sys_.ring, sys_.k, 0, 0)
             : k > 0          ? compose(hl_power(j, k - 1), l2_)
                              : compose(hl_power(j - 1, 0), h_);
  return powers_.emplace(key, std::move(r)).first->second;
}

DiffOp ParamExpander::expand(const CanonicalOp& c) {
  std::map<std::pair<int, int>, CanonicalOp> grouped;
  FunElement CanonicalOp::*parts[] = {&CanonicalOp::A, &CanonicalOp::B, &CanonicalOp::C, &CanonicalOp::D};
  for (auto part : parts)
    for (auto& [jk, f] : split_params(c.*part)) {
      auto [it, fresh] = grouped.try_emplace(jk, CanonicalOp::zero(sys_));
      it->second.*part += f;
    }
  DiffOp r(sys_.ring, sys_.k);
  for (const auto& [jk, op] : grouped) r += compose(to_diffop(op, sys_), hl_power(jk.first, jk.second));
  return r;
}

DiffOp expand_params(const CanonicalOp& c, const SeparableSystem& sys) { return ParamExpander(sys).expand(c); }

int symmetry_order(const CanonicalOp& c) {
  int best = -1;
  auto scan = [&best](const FunElement& f, int base) {
    for (const auto& [m, coef] : f.terms())
      for (const auto& t : coef.num().terms())
        best = std::max(best, base + 2 * (mono::exponent(t.key, Var::H) + mono::exponent(t.key, Var::L2)));
  };
  scan(c.A, 2);
  scan(c.B, 1);
  scan(c.C, 1);
  scan(c.D, 0);
  return best;
}

}  // namespace superint
