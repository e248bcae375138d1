#include "superint/phase.hpp"

#include <algorithm>
#include <stdexcept>

namespace superint {

PhaseFn PhaseFn::fn(const FunElement& f) {
  PhaseFn r(f.ring(), f.k());
  r.add_term(0, 0, f);
  return r;
}

PhaseFn PhaseFn::p(Ring ring, const Rational& k, int m, int n) {
  PhaseFn r(ring, k);
  r.add_term(m, n, FunElement(ring, k, 1));
  return r;
}

void PhaseFn::add_term(int m, int n, const FunElement& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = t_.try_emplace({m, n}, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PhaseFn& PhaseFn::operator+=(const PhaseFn& o) {
  for (const auto& [mn, f] : o.t_) add_term(mn.first, mn.second, f);
  return *this;
}

PhaseFn& PhaseFn::operator-=(const PhaseFn& o) {
  for (const auto& [mn, f] : o.t_) add_term(mn.first, mn.second, -f);
  return *this;
}

PhaseFn operator*(const PhaseFn& x, const PhaseFn& y) {
  PhaseFn r(x.ring_, x.k_);
  for (const auto& [a, f] : x.t_)
    for (const auto& [b, g] : y.t_) r.add_term(a.first + b.first, a.second + b.second, f * g);
  return r;
}

PhaseFn PhaseFn::diff_u(Coord u) const {
  PhaseFn r(ring_, k_);
  for (const auto& [mn, f] : t_) r.add_term(mn.first, mn.second, f.diff(u));
  return r;
}

PhaseFn PhaseFn::diff_p(Coord u) const {
  PhaseFn r(ring_, k_);
  for (const auto& [mn, f] : t_) {
    int e = u == Coord::U1 ? mn.first : mn.second;
    if (e == 0) continue;
    r.add_term(mn.first - (u == Coord::U1), mn.second - (u == Coord::U2), f * ParamRatFn(e));
  }
  return r;
}

PhaseFn PhaseFn::lmul(const FunElement& f) const {
  PhaseFn r(ring_, k_);
  for (const auto& [mn, g] : t_) r.add_term(mn.first, mn.second, f * g);
  return r;
}

PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g) {
  PhaseFn r = f.diff_u(Coord::U1) * g.diff_p(Coord::U1) - f.diff_p(Coord::U1) * g.diff_u(Coord::U1);
  r += f.diff_u(Coord::U2) * g.diff_p(Coord::U2);
  r -= f.diff_p(Coord::U2) * g.diff_u(Coord::U2);
  return r;
}

PhaseFn classical_H(const SeparableSystem& sys) {
  PhaseFn h = PhaseFn::p(sys.ring, sys.k, 2, 0) + PhaseFn::p(sys.ring, sys.k, 0, 2) + PhaseFn::fn(sys.v1 + sys.v2);
  return h.lmul(sys.inv_f());
}

PhaseFn classical_L2(const SeparableSystem& sys) {
  PhaseFn a = (PhaseFn::p(sys.ring, sys.k, 2, 0) + PhaseFn::fn(sys.v1)).lmul(sys.f2);
  PhaseFn b = (PhaseFn::p(sys.ring, sys.k, 0, 2) + PhaseFn::fn(sys.v2)).lmul(sys.f1);
  return (a - b).lmul(sys.inv_f());
}

PhaseFn expand_params_classical(const CanonicalOp& c, const SeparableSystem& sys) {
  PhaseFn h = classical_H(sys), l2 = classical_L2(sys);
  std::map<std::pair<int, int>, PhaseFn> powers;
  auto power = [&](int j, int k) -> const PhaseFn& {
    auto key = std::make_pair(j, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    PhaseFn r = PhaseFn::p(sys.ring, sys.k, 0, 0);
    for (int i = 0; i < j; ++i) r = r * h;
    for (int i = 0; i < k; ++i) r = r * l2;
    return powers.emplace(key, std::move(r)).first->second;
  };
  PhaseFn out(sys.ring, sys.k);
  std::pair<const FunElement*, std::pair<int, int>> parts[] = {
      {&c.A, {1, 1}}, {&c.B, {1, 0}}, {&c.C, {0, 1}}, {&c.D, {0, 0}}};
  for (const auto& [f, mn] : parts)
    for (const auto& [jk, g] : split_params(*f)) {
      PhaseFn term(sys.ring, sys.k);
      term.add_term(mn.first, mn.second, g);
      out += term * power(jk.first, jk.second);
    }
  return out;
}

PhaseFn classical_limit(const DiffOp& d) {
  auto weight = [](int mn, const ParamPoly::Term& t) { return mn + 2 * mono::exponent(t.key, Var::Alpha); };
  int top = -1;
  for (const auto& [mn, f] : d.terms())
    for (const auto& [m, c] : f.terms()) {
      if (c.den().depends_on(Var::Alpha)) throw std::invalid_argument("classical_limit: coefficient denominator depends on alpha");
      for (const auto& t : c.num().terms()) top = std::max(top, weight(mn.first + mn.second, t));
    }
  PhaseFn r(d.ring(), d.k());
  for (const auto& [mn, f] : d.terms()) {
    FunElement g = f.zero();
    for (const auto& [m, c] : f.terms()) {
      std::vector<ParamPoly::Term> ts;
      for (const auto& t : c.num().terms())
        if (weight(mn.first + mn.second, t) == top) ts.push_back(t);
      if (!ts.empty()) g.add_term(m, ParamRatFn::make(ParamPoly::from_terms(std::move(ts)), c.den()));
    }
    r.add_term(mn.first, mn.second, g);
  }
  return r;
}

}  // namespace superint
