#include "superint/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superint {

const char* var_name(Var v) {
  switch (v) {
    case Var::H: return "H";
    case Var::L2: return "L2";
    case Var::Alpha: return "alpha";
    case Var::Beta: return "beta";
    case Var::Gamma: return "gamma";
  }
  return "?";
}

namespace mono {

uint64_t pack(const Exponents& e) {
  uint64_t key = 0;
  uint64_t deg = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] < 0 || e[i] > 255) throw std::range_error("monomial exponent out of range");
    key |= static_cast<uint64_t>(e[i]) << shift(static_cast<Var>(i));
    deg += static_cast<uint64_t>(e[i]);
  }
  return key | (deg << 40);
}

Exponents unpack(uint64_t key) {
  Exponents e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(key, static_cast<Var>(i));
  return e;
}

uint64_t mul(uint64_t a, uint64_t b) {
  constexpr uint64_t kCarryBits = (uint64_t{1} << 8) | (uint64_t{1} << 16) | (uint64_t{1} << 24) |
                                  (uint64_t{1} << 32) | (uint64_t{1} << 40);
  uint64_t s = a + b;
  if ((a ^ b ^ s) & kCarryBits) throw std::overflow_error("monomial exponent overflow");
  return s;
}

bool divides(uint64_t d, uint64_t m) {
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (exponent(d, v) > exponent(m, v)) return false;
  }
  return true;
}

uint64_t gcd(uint64_t a, uint64_t b) {
  Exponents ea = unpack(a), eb = unpack(b);
  for (int i = 0; i < kNumVars; ++i) ea[i] = std::min(ea[i], eb[i]);
  return pack(ea);
}

}  // namespace mono

ParamPoly::ParamPoly(GaussRational c) {
  if (!c.is_zero()) t_.push_back({0, std::move(c)});
}

ParamPoly ParamPoly::var(Var v) { return from_key(mono::unit(v), 1); }

ParamPoly ParamPoly::monomial(const Exponents& e, GaussRational c) {
  return from_key(mono::pack(e), std::move(c));
}

ParamPoly ParamPoly::from_key(uint64_t key, GaussRational c) {
  ParamPoly p;
  if (!c.is_zero()) p.t_.push_back({key, std::move(c)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
  ParamPoly p;
  size_t s = 0;
  while (s < terms.size()) {
    size_t e = s + 1;
    GaussRational acc = std::move(terms[s].c);
    for (; e < terms.size() && terms[e].key == terms[s].key; ++e) acc += terms[e].c;
    if (!acc.is_zero()) p.t_.push_back({terms[s].key, std::move(acc)});
    s = e;
  }
  return p;
}

GaussRational ParamPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("ParamPoly::constant_value on non-constant " + str());
  return t_.empty() ? GaussRational() : t_[0].c;
}

GaussRational ParamPoly::constant_term() const {
  if (!t_.empty() && t_.back().key == 0) return t_.back().c;
  return {};
}

int ParamPoly::degree(Var v) const {
  int d = t_.empty() ? -1 : 0;
  for (const auto& t : t_) d = std::max(d, mono::exponent(t.key, v));
  return d;
}

unsigned ParamPoly::var_mask() const {
  unsigned m = 0;
  for (const auto& t : t_)
    for (int i = 0; i < kNumVars; ++i)
      if (mono::exponent(t.key, static_cast<Var>(i))) m |= 1u << i;
  return m;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

static std::vector<ParamPoly::Term> merge_add(const std::vector<ParamPoly::Term>& a,
                                              const std::vector<ParamPoly::Term>& b, bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key > a[i].key) {
      out.push_back({b[j].key, subtract ? -b[j].c : b[j].c});
      ++j;
    } else {
      GaussRational c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge_add(t_, o.t_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_add(t_, o.t_, true);
  return *this;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.t_ = merge_add(a.t_, b.t_, false);
  return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.t_ = merge_add(a.t_, b.t_, true);
  return r;
}

ParamPoly ParamPoly::mul_term(uint64_t key, const GaussRational& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({mono::mul(t.key, key), t.c * c});
  return r;
}

ParamPoly& ParamPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    t_.clear();
  } else if (!c.is_one()) {
    for (auto& t : t_) t.c *= c;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_term(a.t_[0].key, a.t_[0].c);
  if (b.size() == 1) return a.mul_term(b.t_[0].key, b.t_[0].c);
  struct Prod {
    uint64_t key;
    uint32_t i, j;
  };
  std::vector<Prod> ps;
  ps.reserve(a.size() * b.size());
  for (uint32_t i = 0; i < a.size(); ++i)
    for (uint32_t j = 0; j < b.size(); ++j) ps.push_back({mono::mul(a.t_[i].key, b.t_[j].key), i, j});
  std::sort(ps.begin(), ps.end(), [](const Prod& x, const Prod& y) { return x.key > y.key; });
  ParamPoly r;
  size_t s = 0;
  while (s < ps.size()) {
    size_t e = s;
    GaussRational acc = a.t_[ps[s].i].c * b.t_[ps[s].j].c;
    while (++e < ps.size() && ps[e].key == ps[s].key) acc += a.t_[ps[e].i].c * b.t_[ps[e].j].c;
    if (!acc.is_zero()) r.t_.push_back({ps[s].key, std::move(acc)});
    s = e;
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].key != b.t_[i].key || !(a.t_[i].c == b.t_[i].c)) return false;
  return true;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

ParamPoly ParamPoly::swap_vars(Var x, Var y) const {
  std::vector<Term> ts;
  ts.reserve(t_.size());
  for (const auto& t : t_) {
    Exponents e = mono::unpack(t.key);
    std::swap(e[static_cast<int>(x)], e[static_cast<int>(y)]);
    ts.push_back({mono::pack(e), t.c});
  }
  return from_terms(std::move(ts));
}

ParamPoly ParamPoly::conj() const {
  ParamPoly r = *this;
  for (auto& t : r.t_) t.c = t.c.conj();
  return r;
}

ParamPoly ParamPoly::derivative(Var v) const {
  std::vector<Term> ts;
  for (const auto& t : t_) {
    int e = mono::exponent(t.key, v);
    if (e == 0) continue;
    ts.push_back({t.key - mono::unit(v), t.c * GaussRational(e)});
  }
  return from_terms(std::move(ts));
}

static std::string mono_str(uint64_t key) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    int e = mono::exponent(key, v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string ParamPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (size_t n = 0; n < t_.size(); ++n) {
    const auto& t = t_[n];
    bool neg = false;
    std::string coef;
    if (t.c.is_real()) {
      neg = t.c.re().sign() < 0;
      coef = (neg ? -t.c.re() : t.c.re()).str();
    } else if (t.c.re().is_zero()) {
      neg = t.c.im().sign() < 0;
      coef = GaussRational(Rational(0), neg ? -t.c.im() : t.c.im()).str();
    } else {
      coef = "(" + t.c.str() + ")";
    }
    std::string m = mono_str(t.key);
    std::string body = m.empty() ? coef : (coef == "1" ? m : coef + "*" + m);
    if (n == 0) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out;
}

size_t ParamPoly::hash() const {
  size_t h = t_.size();
  for (const auto& t : t_) {
    h = h * 1000003u ^ std::hash<uint64_t>()(t.key);
    h = h * 1000003u ^ std::hash<std::string>()(t.c.re().str());
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

}  // namespace superint
