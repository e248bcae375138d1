#include "superint/engine_cartesian.hpp"

#include <numeric>
#include <optional>

#include "superint/poly_ops.hpp"

namespace superint {

namespace {

const ParamRatFn kH = ParamRatFn::var(Var::H);
const ParamRatFn kL2 = ParamRatFn::var(Var::L2);
const ParamRatFn kAlpha = ParamRatFn::var(Var::Alpha);
const GaussRational kI = GaussRational::i();

ParamRatFn q(const Rational& r) { return ParamRatFn(r); }

bool is_zero(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

Vec2 add(const Vec2& x, const Vec2& y) { return {x[0] + y[0], x[1] + y[1]}; }

Vec2 mat_vec(const ExactMatrix& m, const Vec2& v) {
  auto r = m.apply({v[0], v[1]});
  return {r[0], r[1]};
}

// Undivided step matrices: pivot·C_{a,b} = Nv·C_{a−1,b} + Nh·C_{a,b−1}.
ExactMatrix numer_vertical(const Rational& a, const Rational& b, const Rational& k, Variant v) {
  Rational a2 = a * a, kb = k * b, kb2 = kb * kb;
  if (v == Variant::Classical) {
    ParamRatFn f = -(kH * (2 * a - 1));
    return {{f * q(a), 0}, {0, f * q(a - 1)}};
  }
  ParamRatFn f = kH * (2 * a - 1);
  return {{f * (q(a * (a2 - 3 * kb2)) - kL2 * a), f * ParamRatFn(kI * (4 * a * kb * (a - 1)))},
          {f * ParamRatFn(kI * kb) * (q(kb2) - kL2), f * q(a - 1) * (q(a2 + kb2) - kL2)}};
}

ExactMatrix numer_horizontal(const Rational& a, const Rational& b, const Rational& k, Variant v) {
  Rational a2 = a * a, kb = k * b, kb2 = kb * kb;
  if (v == Variant::Classical) {
    ParamRatFn f = kAlpha * (k * k * (2 * b - 1));
    return {{f * q(b), 0}, {0, f * q(b - 1)}};
  }
  ParamRatFn f = kAlpha * (k * (2 * b - 1));
  return {{f * q(kb) * (kL2 + (3 * a2 - kb2)), f * ParamRatFn(-kI * (4 * a * kb * k * (b - 1)))},
          {f * ParamRatFn(-kI * a) * (q(a2) - kL2), f * q(-k * (b - 1)) * (q(a2 + kb2) - kL2)}};
}

Rational half(long n) { return Rational(n, 2); }

void check_coprime(long p, long q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

LatticeState2 empty_state(long p, long q, int sign, Variant variant) {
  LatticeState2 s;
  s.k = cartesian_k(p, q, sign);
  s.variant = variant;
  s.start = start_point(p, q, sign);
  s.walls = zero_walls(p, q);
  return s;
}

std::string where(const Rational& a, const Rational& b) { return "(" + a.str() + ", " + b.str() + ")"; }

}  // namespace

Vec2 LatticeState2::at(const Rational& a, const Rational& b) const {
  auto it = entries.find({a, b});
  return it == entries.end() ? Vec2{0, 0} : it->second;
}

Rational cartesian_k(long p, long q, int sign) {
  check_coprime(p, q);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return Rational(sign * p, q);
}

ParamRatFn j_factor(const Rational& a, const Rational& b, const Rational& k) {
  Rational kb = k * b;
  return q(2 * (a * a - kb * kb)) * (q((a - kb) * (a - kb)) - kL2) * (q((a + kb) * (a + kb)) - kL2);
}

ParamRatFn pivot_factor(const Rational& a, const Rational& b, const Rational& k, Variant v) {
  if (v == Variant::Quantum) return j_factor(a, b, k);
  return kL2 * (2 * (a * a - k * k * b * b));
}

Vec2 transfer_numerator(const Vec2& c_left, const Vec2& c_below, const Rational& a, const Rational& b,
                        const Rational& k, Variant v) {
  Vec2 r{0, 0};
  if (!is_zero(c_below)) r = add(r, mat_vec(numer_vertical(a, b, k, v), c_below));
  if (!is_zero(c_left)) r = add(r, mat_vec(numer_horizontal(a, b, k, v), c_left));
  return r;
}

Vec2 transfer_step(const Vec2& c_left, const Vec2& c_below, const Rational& a, const Rational& b,
                   const Rational& k, Variant v) {
  Vec2 n = transfer_numerator(c_left, c_below, a, b, k, v);
  if (is_zero(n)) return n;
  ParamRatFn piv = pivot_factor(a, b, k, v);
  if (piv.is_zero()) throw LatticeError("singular pivot at " + where(a, b));
  return {n[0] / piv, n[1] / piv};
}

ExactMatrix vertical_step(const Rational& a, const Rational& b, const Rational& k, Variant v) {
  ExactMatrix m = numer_vertical(a, b, k, v);
  ParamRatFn inv = pivot_factor(a, b, k, v).inverse();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) m(i, j) *= inv;
  return m;
}

ExactMatrix horizontal_step(const Rational& a, const Rational& b, const Rational& k, Variant v) {
  ExactMatrix m = numer_horizontal(a, b, k, v);
  ParamRatFn inv = pivot_factor(a, b, k, v).inverse();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) m(i, j) *= inv;
  return m;
}

GridPoint start_point(long p, long q, int sign) {
  cartesian_k(p, q, sign);
  return {-half(p), -half(q)};
}

GridPoint zero_walls(long p, long q) {
  check_coprime(p, q);
  return {p % 2 ? half(1) : Rational(1), q % 2 ? half(1) : Rational(1)};
}

LatticeState2 lattice_fill(long p, long q, int sign, Variant variant, const Vec2& seed) {
  LatticeState2 s = empty_state(p, q, sign, variant);
  const auto& [a0, b0] = s.start;
  const auto& [aw, bw] = s.walls;
  if (!is_zero(seed)) s.entries[s.start] = seed;
  for (Rational a = a0; a <= aw; a += 1)
    for (Rational b = b0; b <= bw; b += 1) {
      if (a == a0 && b == b0) continue;
      Vec2 n = transfer_numerator(s.at(a, b - 1), s.at(a - 1, b), a, b, s.k, variant);
      if (is_zero(n)) continue;
      ParamRatFn piv = pivot_factor(a, b, s.k, variant);
      if (piv.is_zero()) throw LatticeError("singular pivot with nonzero data at " + where(a, b));
      if (a == aw || b == bw) throw LatticeError("support escapes the predicted rectangle at " + where(a, b));
      s.entries[{a, b}] = {n[0] / piv, n[1] / piv};
    }
  return s;
}

LatticeState2 path_sum_oracle(long p, long q, int sign, Variant variant, const Vec2& seed) {
  LatticeState2 s = empty_state(p, q, sign, variant);
  const auto& [aw, bw] = s.walls;
  std::map<GridPoint, Vec2> sums;
  // Step matrix into each point, or nullopt when its pivot vanishes.
  std::map<std::pair<GridPoint, bool>, std::optional<ExactMatrix>> steps;
  auto step = [&](const Rational& a, const Rational& b, bool vertical) -> const std::optional<ExactMatrix>& {
    auto [it, fresh] = steps.try_emplace({{a, b}, vertical});
    if (fresh && !pivot_factor(a, b, s.k, variant).is_zero())
      it->second = vertical ? vertical_step(a, b, s.k, variant) : horizontal_step(a, b, s.k, variant);
    return it->second;
  };
  // Depth-first walk over all monotone paths; each node is one path prefix.
  auto walk = [&](auto&& self, const Rational& a, const Rational& b, const Vec2& v) -> void {
    auto [it, fresh] = sums.try_emplace({a, b}, v);
    if (!fresh) it->second = add(it->second, v);
    if (a + 1 <= aw)
      if (const auto& m = step(a + 1, b, true)) {
        Vec2 w = mat_vec(*m, v);
        if (!is_zero(w)) self(self, a + 1, b, w);
      }
    if (b + 1 <= bw)
      if (const auto& m = step(a, b + 1, false)) {
        Vec2 w = mat_vec(*m, v);
        if (!is_zero(w)) self(self, a, b + 1, w);
      }
  };
  if (!is_zero(seed)) walk(walk, s.start.first, s.start.second, seed);
  for (auto& [pt, v] : sums)
    if (!is_zero(v)) s.entries.emplace(pt, v);
  return s;
}

std::pair<ParamPoly, LatticeState2> clear_denominators(const LatticeState2& s) {
  ParamPoly scale(1);
  for (const auto& [pt, v] : s.entries)
    for (const auto& x : v) scale = lcm(scale, x.den());
  scale = make_monic(scale);
  LatticeState2 out = s;
  for (auto& [pt, v] : out.entries)
    for (auto& x : v) x *= ParamRatFn(scale);
  return {scale, out};
}

PotentialPair build_fg(const LatticeState2& s) {
  PotentialPair r{FunElement(Ring::Exp, s.k), FunElement(Ring::Exp, s.k), s.variant};
  for (const auto& [pt, v] : s.entries) {
    r.F += FunElement::exp_term(s.k, pt.first, pt.second * s.k, v[0]);
    r.G += FunElement::exp_term(s.k, pt.first, pt.second * s.k, v[1]);
  }
  return r;
}

}  // namespace superint
