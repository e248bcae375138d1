#include "superint/fun_element.hpp"

#include <sstream>
#include <vector>

namespace superint {

const char* ring_name(Ring r) { return r == Ring::Exp ? "exp" : "trig"; }

std::string FunMonomial::str(Ring r) const {
  std::vector<std::string> parts;
  if (!a.is_zero()) parts.push_back("exp(" + (Rational(2) * a).str() + "*R)");
  if (r == Ring::Exp) {
    if (!t.is_zero()) parts.push_back("exp(" + (Rational(2) * t).str() + "*i*th)");
  } else {
    if (b == 1) parts.push_back("s");
    else if (b != 0) parts.push_back("s^" + std::to_string(b));
    if (c) parts.push_back("c");
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

FunElement::FunElement(Ring ring, Rational k, const ParamRatFn& c) : ring_(ring), k_(std::move(k)) {
  if (!c.is_zero()) t_.emplace(FunMonomial{}, c);
}

FunElement FunElement::exp_term(Rational k, Rational a, Rational t, const ParamRatFn& c) {
  FunElement f(Ring::Exp, std::move(k));
  f.add_term({std::move(a), std::move(t), 0, 0}, c);
  return f;
}

FunElement FunElement::trig_term(Rational k, Rational a, int b, int c, const ParamRatFn& coef) {
  FunElement f(Ring::Trig, std::move(k));
  if (c == 0 || c == 1) {
    f.add_term({std::move(a), Rational(0), b, c}, coef);
  } else {
    // fold cos^c into c ∈ {0,1}
    FunElement base = trig_term(f.k_, a, b, c % 2, coef);
    FunElement cc = trig_term(f.k_, 0, 0, 0) - trig_term(f.k_, 0, 2, 0);
    return base * cc.pow(static_cast<unsigned>(c / 2));
  }
  return f;
}

FunElement FunElement::from_terms(Ring ring, Rational k, TermMap terms) {
  FunElement f(ring, std::move(k));
  for (auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

bool FunElement::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == FunMonomial{});
}

bool FunElement::depends_on(Coord u) const {
  for (const auto& [m, c] : t_) {
    if (u == Coord::U1 && !m.a.is_zero()) return true;
    if (u == Coord::U2 && (!m.t.is_zero() || m.b != 0 || m.c != 0)) return true;
  }
  return false;
}

void FunElement::add_term(const FunMonomial& m, const ParamRatFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void FunElement::check_ring(const FunElement& o) const {
  if (ring_ != o.ring_ || (ring_ == Ring::Trig && k_ != o.k_))
    throw RingMismatch("function ring mismatch");
}

FunElement FunElement::operator-() const {
  FunElement r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

FunElement& FunElement::operator+=(const FunElement& o) {
  check_ring(o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

FunElement& FunElement::operator-=(const FunElement& o) {
  check_ring(o);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

FunElement& FunElement::operator*=(const ParamRatFn& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  if (c.is_constant() && c.constant_value().is_one()) return *this;
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

FunElement operator*(const FunElement& x, const FunElement& y) {
  x.check_ring(y);
  FunElement r(x.ring_, x.k_);
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_) {
      ParamRatFn c = cx * cy;
      FunMonomial m{mx.a + my.a, mx.t + my.t, mx.b + my.b, mx.c + my.c};
      if (m.c == 2) {
        // cos² = 1 − sin²
        m.c = 0;
        r.add_term(m, c);
        m.b += 2;
        r.add_term(m, -c);
      } else {
        r.add_term(m, c);
      }
    }
  return r;
}

bool operator==(const FunElement& x, const FunElement& y) {
  if (x.is_zero() && y.is_zero()) return true;
  return x.ring_ == y.ring_ && x.t_ == y.t_ && (x.ring_ == Ring::Exp || x.k_ == y.k_);
}

FunElement FunElement::pow(unsigned e) const {
  FunElement r = one(), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

FunElement FunElement::diff(Coord u) const {
  FunElement r(ring_, k_);
  for (const auto& [m, c] : t_) {
    if (u == Coord::U1) {
      if (!m.a.is_zero()) r.add_term(m, c * ParamRatFn(Rational(2) * m.a));
    } else if (ring_ == Ring::Exp) {
      if (!m.t.is_zero()) r.add_term(m, c * ParamRatFn(GaussRational(Rational(0), Rational(2) * m.t)));
    } else if (m.c == 0) {
      if (m.b != 0) r.add_term({m.a, m.t, m.b - 1, 1}, c * ParamRatFn(Rational(2) * k_ * m.b));
    } else {
      ParamRatFn k2 = c * ParamRatFn(Rational(2) * k_);
      if (m.b != 0) r.add_term({m.a, m.t, m.b - 1, 0}, k2 * ParamRatFn(m.b));
      r.add_term({m.a, m.t, m.b + 1, 0}, k2 * ParamRatFn(-(m.b + 1)));
    }
  }
  return r;
}

FunElement FunElement::diff(Coord u, unsigned times) const {
  FunElement r = *this;
  for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = r.diff(u);
  return r;
}

FunElement FunElement::antidiff(Coord u) const {
  FunElement r(ring_, k_);
  auto fail = [this](const FunMonomial& m, const char* why) {
    throw NotIntegrable(std::string("antidiff: ") + why + ": " + m.str(ring_));
  };
  if (u == Coord::U1) {
    for (const auto& [m, c] : t_) {
      if (m.a.is_zero()) fail(m, "term constant in u1");
      r.add_term(m, c / ParamRatFn(Rational(2) * m.a));
    }
    return r;
  }
  if (ring_ == Ring::Exp) {
    for (const auto& [m, c] : t_) {
      if (m.t.is_zero()) fail(m, "term constant in u2");
      r.add_term(m, c / ParamRatFn(GaussRational(Rational(0), Rational(2) * m.t)));
    }
    return r;
  }
  // trig ring, grouped by the passive e^{2aR} factor
  std::map<Rational, std::map<int, ParamRatFn>> plain;
  const ParamRatFn twok(Rational(2) * k_);
  for (const auto& [m, c] : t_) {
    if (m.c == 1) {
      if (m.b == -1) fail(m, "s^-1 c has no antiderivative in the ring");
      r.add_term({m.a, m.t, m.b + 1, 0}, c / (twok * ParamRatFn(m.b + 1)));
    } else {
      plain[m.a][m.b] += c;
    }
  }
  for (auto& [a, row] : plain) {
    // positive powers from the top: κ s^B = d(μ s^{B−1} c) + κ(B−1)/B s^{B−2}
    while (!row.empty() && row.rbegin()->first > 0) {
      auto it = std::prev(row.end());
      int B = it->first;
      ParamRatFn kap = it->second;
      row.erase(it);
      if (kap.is_zero()) continue;
      r.add_term({a, Rational(0), B - 1, 1}, -kap / (twok * ParamRatFn(B)));
      if (B > 1) row[B - 2] += kap * ParamRatFn(Rational(B - 1, B));
    }
    // negative powers from the bottom: κ s^B = d(μ s^{B+1} c) + κ(B+2)/(B+1) s^{B+2}
    while (!row.empty() && row.begin()->first < -1) {
      auto it = row.begin();
      int B = it->first;
      ParamRatFn kap = it->second;
      row.erase(it);
      if (kap.is_zero()) continue;
      r.add_term({a, Rational(0), B + 1, 1}, kap / (twok * ParamRatFn(B + 1)));
      if (B < -2) row[B + 2] += kap * ParamRatFn(Rational(B + 2, B + 1));
    }
    for (const auto& [B, kap] : row)
      if (!kap.is_zero()) fail(FunMonomial{a, Rational(0), B, 0}, "leftover term not a u2-derivative");
  }
  return r;
}

FunElement FunElement::inverse() const {
  if (t_.size() != 1) throw std::domain_error("inverse: only single monomials are invertible");
  const auto& [m, c] = *t_.begin();
  if (m.c != 0) throw std::domain_error("inverse: cosine factor is not invertible");
  FunElement r(ring_, k_);
  r.add_term({-m.a, -m.t, -m.b, 0}, c.inverse());
  return r;
}

FunElement FunElement::map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const {
  FunElement r(ring_, k_);
  for (const auto& [m, c] : t_) r.add_term(m, f(c));
  return r;
}

FunElement FunElement::swap_params(Var x, Var y) const {
  return map_coeffs([x, y](const ParamRatFn& c) { return c.swap_vars(x, y); });
}

std::string FunElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (!(it->first == FunMonomial{})) os << "*" << it->first.str(ring_);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FunElement& f) { return os << f.str(); }

}  // namespace superint
