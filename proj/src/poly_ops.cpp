#include "superint/poly_ops.hpp"

#include <bit>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace superint {

namespace {

using Term = ParamPoly::Term;
using UPoly = std::vector<ParamPoly>;  // dense in the main variable, index = degree

// Arithmetic modulo p = 998244353, where i maps to a square root of -1.
namespace modp {
constexpr uint64_t P = 998244353;

uint64_t power(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  for (b %= P; e; e >>= 1, b = b * b % P)
    if (e & 1) r = r * b % P;
  return r;
}
uint64_t inv(uint64_t x) { return power(x, P - 2); }
const uint64_t I = power(3, (P - 1) / 4);

std::optional<uint64_t> of(const Rational& q) {
  uint64_t d = mpz_fdiv_ui(q.den().get_mpz_t(), P);
  if (d == 0) return std::nullopt;
  return mpz_fdiv_ui(q.num().get_mpz_t(), P) * inv(d) % P;
}
std::optional<uint64_t> of(const GaussRational& c) {
  auto re = of(c.re()), im = of(c.im());
  if (!re || !im) return std::nullopt;
  return (*re + *im * I) % P;
}

// Dense image in x with every other variable evaluated at pt.
std::optional<std::vector<uint64_t>> image(const ParamPoly& p, Var x, const std::array<uint64_t, kNumVars>& pt) {
  std::vector<uint64_t> v(p.degree(x) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = of(t.c);
    if (!c) return std::nullopt;
    uint64_t m = *c;
    for (int k = 0; k < kNumVars; ++k) {
      Var y = static_cast<Var>(k);
      if (y != x) m = m * power(pt[k], mono::exponent(t.key, y)) % P;
    }
    uint64_t& slot = v[mono::exponent(t.key, x)];
    slot = (slot + m) % P;
  }
  return v;
}

size_t gcd_degree(std::vector<uint64_t> u, std::vector<uint64_t> w) {
  auto trim = [](std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(u);
  trim(w);
  while (!w.empty()) {
    uint64_t li = inv(w.back());
    while (u.size() >= w.size()) {
      uint64_t f = u.back() * li % P;
      size_t s = u.size() - w.size();
      for (size_t j = 0; j < w.size(); ++j) u[j + s] = (u[j + s] + P - f * w[j] % P) % P;
      trim(u);
    }
    std::swap(u, w);
  }
  return u.size() - 1;
}
}  // namespace modp

// Upper bound on deg_x gcd(a, b) from a random modular image; nullopt if no
// good evaluation point was found.
std::optional<int> gcd_degree_bound(const ParamPoly& a, const ParamPoly& b, Var x) {
  static std::mt19937_64 rng(0x5eed);
  int da = a.degree(x), db = b.degree(x);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::array<uint64_t, kNumVars> pt;
    for (auto& v : pt) v = 2 + rng() % (modp::P - 3);
    auto ia = modp::image(a, x, pt), ib = modp::image(b, x, pt);
    if (!ia || !ib) return std::nullopt;
    if (ia->back() == 0 || ib->back() == 0 || static_cast<int>(ia->size()) != da + 1 ||
        static_cast<int>(ib->size()) != db + 1)
      continue;
    return static_cast<int>(modp::gcd_degree(std::move(*ia), std::move(*ib)));
  }
  return std::nullopt;
}

UPoly to_upoly(const ParamPoly& p, Var x) {
  int d = p.degree(x);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    int e = mono::exponent(t.key, x);
    buckets[e].push_back({t.key - static_cast<uint64_t>(e) * mono::unit(x), t.c});
  }
  UPoly u;
  u.reserve(d + 1);
  for (auto& b : buckets) u.push_back(ParamPoly::from_terms(std::move(b)));
  return u;
}

ParamPoly from_upoly(const UPoly& u, Var x) {
  std::vector<Term> ts;
  for (size_t e = 0; e < u.size(); ++e)
    for (const auto& t : u[e].terms()) ts.push_back({t.key + e * mono::unit(x), t.c});
  return ParamPoly::from_terms(std::move(ts));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

uint64_t monomial_content(const ParamPoly& p) {
  uint64_t g = p.terms().front().key;
  for (const auto& t : p.terms()) {
    g = mono::gcd(g, t.key);
    if (g == 0) break;
  }
  return g;
}

ParamPoly strip_monomial(const ParamPoly& p, uint64_t m) {
  if (m == 0) return p;
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.key - m, t.c});
  return ParamPoly::from_terms(std::move(ts));
}

ParamPoly content(const UPoly& u) {
  ParamPoly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(1);
  }
  return g;
}

// Primitive part with the numeric scale fixed by the leading term.
UPoly primitive(UPoly u) {
  trim(u);
  if (u.empty()) return u;
  ParamPoly c = content(u);
  GaussRational lc = u.back().lead().c;
  if (!c.is_one()) {
    for (auto& x : u) x = exact_quotient(x, c);
    lc = u.back().lead().c;
  }
  GaussRational inv = GaussRational(1) / lc;
  for (auto& x : u) x *= inv;
  return u;
}

UPoly prem(UPoly r, const UPoly& b) {
  const size_t db = b.size() - 1;
  const ParamPoly& lcb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    size_t dr = r.size() - 1;
    ParamPoly lcr = r.back();
    size_t shift = dr - db;
    for (auto& x : r) x = x * lcb;
    for (size_t j = 0; j <= db; ++j) r[j + shift] -= lcr * b[j];
    trim(r);
  }
  return r;
}

// Univariate gcd over Q(i) by monic Euclid.
ParamPoly gcd_univariate(const ParamPoly& a, const ParamPoly& b, Var x) {
  auto dense = [x](const ParamPoly& p) {
    std::vector<GaussRational> v(p.degree(x) + 1);
    for (const auto& t : p.terms()) v[mono::exponent(t.key, x)] = t.c;
    return v;
  };
  auto monic = [](std::vector<GaussRational>& v) {
    GaussRational inv = GaussRational(1) / v.back();
    for (auto& c : v) c *= inv;
  };
  std::vector<GaussRational> u = dense(a), w = dense(b);
  if (u.size() < w.size()) std::swap(u, w);
  monic(u);
  monic(w);
  while (!w.empty()) {
    // u mod w, w monic
    while (u.size() >= w.size()) {
      GaussRational lc = u.back();
      size_t s = u.size() - w.size();
      for (size_t j = 0; j < w.size(); ++j) u[j + s] -= lc * w[j];
      u.pop_back();
      while (!u.empty() && u.back().is_zero()) u.pop_back();
    }
    if (!u.empty()) monic(u);
    std::swap(u, w);
  }
  std::vector<Term> ts;
  for (size_t e = 0; e < u.size(); ++e)
    if (!u[e].is_zero()) ts.push_back({e * mono::unit(x), u[e]});
  return ParamPoly::from_terms(std::move(ts));
}

// gcd(b, coefficients of a with respect to v), for v absent from b.
ParamPoly gcd_with_content(const ParamPoly& a, Var v, const ParamPoly& b) {
  UPoly u = to_upoly(a, v);
  ParamPoly g = b;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(1);
  }
  return g;
}

ParamPoly gcd_core(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  unsigned ma = a.var_mask(), mb = b.var_mask();
  if (unsigned only = ma & ~mb) return gcd_with_content(a, static_cast<Var>(std::countr_zero(only)), b);
  if (unsigned only = mb & ~ma) return gcd_with_content(b, static_cast<Var>(std::countr_zero(only)), a);
  if (std::popcount(ma) == 1) {
    Var x = static_cast<Var>(std::countr_zero(ma));
    if (gcd_degree_bound(a, b, x) == 0) return ParamPoly(1);
    return gcd_univariate(a, b, x);
  }

  Var x = Var::H;
  int best = 1 << 30;
  bool free_of_x = false;
  for (int i = 0; i < kNumVars && !free_of_x; ++i) {
    if (!(ma >> i & 1)) continue;
    Var v = static_cast<Var>(i);
    auto bound = gcd_degree_bound(a, b, v);
    if (bound == 0) {
      free_of_x = true;
      x = v;
      break;
    }
    int d = std::max(a.degree(v), b.degree(v));
    if (d < best) best = d, x = v;
  }
  UPoly ua = to_upoly(a, x), ub = to_upoly(b, x);
  if (free_of_x) {
    // the gcd does not involve x, so it is the gcd of all x-coefficients
    ParamPoly g;
    for (const UPoly* u : {&ua, &ub})
      for (const auto& c : *u) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return ParamPoly(1);
      }
    return g;
  }
  ParamPoly ca = content(ua), cb = content(ub);
  ParamPoly c = gcd(ca, cb);
  UPoly pa = primitive(std::move(ua)), pb = primitive(std::move(ub));
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    UPoly r = prem(pa, pb);
    pa = std::move(pb);
    pb = primitive(std::move(r));
  }
  if (pb.size() == 1) return make_monic(c);  // constant remainder: primitive parts coprime
  return make_monic(c * from_upoly(pa, x));
}

}  // namespace

ParamPoly make_monic(const ParamPoly& p) {
  if (p.is_zero() || p.lead().c.is_one()) return p;
  return p * (GaussRational(1) / p.lead().c);
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a == b) return make_monic(a);
  uint64_t ma = monomial_content(a), mb = monomial_content(b);
  uint64_t m = mono::gcd(ma, mb);
  ParamPoly core = gcd_core(strip_monomial(a, ma), strip_monomial(b, mb));
  return m == 0 ? core : core.mul_term(m, 1);
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return make_monic(a * exact_quotient(b, gcd(a, b)));
}

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return ParamPoly();
  const Term& lb = b.lead();
  if (b.size() == 1) {
    std::vector<Term> ts;
    ts.reserve(a.size());
    GaussRational inv = GaussRational(1) / lb.c;
    for (const auto& t : a.terms()) {
      if (!mono::divides(lb.key, t.key)) return std::nullopt;
      ts.push_back({t.key - lb.key, t.c * inv});
    }
    return ParamPoly::from_terms(std::move(ts));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  std::vector<Term> q;
  ParamPoly r = a;
  GaussRational inv = GaussRational(1) / lb.c;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!mono::divides(lb.key, lr.key)) return std::nullopt;
    uint64_t k = lr.key - lb.key;
    GaussRational c = lr.c * inv;
    r -= b.mul_term(k, c);
    q.push_back({k, std::move(c)});
  }
  return ParamPoly::from_terms(std::move(q));
}

ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

ParamPoly remainder(const ParamPoly& a, const ParamPoly& d) {
  if (d.is_zero()) throw std::domain_error("remainder modulo zero");
  const Term& ld = d.lead();
  GaussRational inv = GaussRational(1) / ld.c;
  std::vector<Term> rem;
  ParamPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (mono::divides(ld.key, lr.key)) {
      r -= d.mul_term(lr.key - ld.key, lr.c * inv);
    } else {
      Term t = lr;
      r -= ParamPoly::from_key(t.key, t.c);
      rem.push_back(std::move(t));
    }
  }
  return ParamPoly::from_terms(std::move(rem));
}

}  // namespace superint
