#include "superint/diffop.hpp"

#include <sstream>
#include <vector>

namespace superint {

namespace {

const std::vector<std::vector<long>>& binomials() {
  static const std::vector<std::vector<long>> table = [] {
    std::vector<std::vector<long>> t(64);
    for (size_t n = 0; n < t.size(); ++n) {
      t[n].assign(n + 1, 1);
      for (size_t i = 1; i < n; ++i) t[n][i] = t[n - 1][i - 1] + t[n - 1][i];
    }
    return t;
  }();
  return table;
}

long binom(int n, int i) { return binomials().at(n).at(i); }

}  // namespace

DiffOp DiffOp::mult(const FunElement& f) {
  DiffOp r(f.ring(), f.k());
  r.add_term(0, 0, f);
  return r;
}

DiffOp DiffOp::d(Ring ring, const Rational& k, int m, int n, const ParamRatFn& c) {
  DiffOp r(ring, k);
  r.add_term(m, n, FunElement(ring, k, c));
  return r;
}

int DiffOp::order() const {
  int o = -1;
  for (const auto& [mn, f] : t_) o = std::max(o, mn.first + mn.second);
  return o;
}

FunElement DiffOp::coeff(int m, int n) const {
  auto it = t_.find({m, n});
  return it == t_.end() ? FunElement(ring_, k_) : it->second;
}

size_t DiffOp::term_count() const {
  size_t n = 0;
  for (const auto& [mn, f] : t_) n += f.size();
  return n;
}

void DiffOp::add_term(int m, int n, const FunElement& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = t_.try_emplace({m, n}, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void DiffOp::check_ring(const DiffOp& o) const {
  if (ring_ != o.ring_ || (ring_ == Ring::Trig && k_ != o.k_)) throw RingMismatch("operator ring mismatch");
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [mn, f] : r.t_) f = -f;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_ring(o);
  for (const auto& [mn, f] : o.t_) add_term(mn.first, mn.second, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_ring(o);
  for (const auto& [mn, f] : o.t_) add_term(mn.first, mn.second, -f);
  return *this;
}

DiffOp& DiffOp::operator*=(const ParamRatFn& c) {
  if (c.is_zero()) t_.clear();
  for (auto& [mn, f] : t_) f *= c;
  return *this;
}

bool operator==(const DiffOp& x, const DiffOp& y) {
  if (x.is_zero() && y.is_zero()) return true;
  return x.ring_ == y.ring_ && x.t_ == y.t_;
}

DiffOp DiffOp::lmul(const FunElement& f) const {
  DiffOp r(ring_, k_);
  for (const auto& [mn, g] : t_) r.add_term(mn.first, mn.second, f * g);
  return r;
}

DiffOp DiffOp::map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const {
  DiffOp r(ring_, k_);
  for (const auto& [mn, g] : t_) r.add_term(mn.first, mn.second, g.map_coeffs(f));
  return r;
}

std::string DiffOp::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "[" << it->second.str() << "]";
    if (it->first.first) os << "*d1^" << it->first.first;
    if (it->first.second) os << "*d2^" << it->first.second;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << d.str(); }

// X ∂1^m ∂2^n ∘ Y ∂1^p ∂2^q = Σ C(m,i) C(n,j) X (∂1^i ∂2^j Y) ∂1^{m−i+p} ∂2^{n−j+q}
DiffOp compose(const DiffOp& x, const DiffOp& y) {
  x.check_ring(y);
  int max_m = 0, max_n = 0;
  for (const auto& [mn, f] : x.terms()) max_m = std::max(max_m, mn.first), max_n = std::max(max_n, mn.second);
  std::map<DiffOp::Key, FunElement> acc;
  auto add = [&acc](int m, int n, FunElement f) {
    if (f.is_zero()) return;
    auto [it, fresh] = acc.try_emplace({m, n}, f);
    if (!fresh) it->second += f;
  };
  for (const auto& [pq, yf] : y.terms()) {
    // derivative table of the y coefficient
    std::vector<std::vector<FunElement>> dy(max_m + 1, std::vector<FunElement>(max_n + 1));
    for (int i = 0; i <= max_m; ++i)
      for (int j = 0; j <= max_n; ++j)
        dy[i][j] = j > 0 ? dy[i][j - 1].diff(Coord::U2) : (i > 0 ? dy[i - 1][0].diff(Coord::U1) : yf);
    for (const auto& [mn, xf] : x.terms()) {
      auto [m, n] = mn;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          if (dy[i][j].is_zero()) continue;
          FunElement prod = xf * dy[i][j];
          long c = binom(m, i) * binom(n, j);
          if (c != 1) prod *= ParamRatFn(c);
          add(m - i + pq.first, n - j + pq.second, std::move(prod));
        }
    }
  }
  DiffOp r(x.ring(), x.k());
  for (auto& [mn, f] : acc) r.add_term(mn.first, mn.second, f);
  return r;
}

DiffOp commutator(const DiffOp& x, const DiffOp& y) { return compose(x, y) - compose(y, x); }

DiffOp power(const DiffOp& x, unsigned e) {
  DiffOp r = DiffOp::d(x.ring(), x.k(), 0, 0);
  for (unsigned i = 0; i < e; ++i) r = compose(r, x);
  return r;
}

}  // namespace superint
