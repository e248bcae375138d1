#include "superint/engine_ttw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "superint/poly_ops.hpp"

namespace superint {

namespace {

struct PolyTerm {
  Exponents e;
  Rational c;
};

ParamRatFn poly(std::initializer_list<PolyTerm> terms) {
  std::vector<ParamPoly::Term> ts;
  for (const auto& t : terms)
    if (!t.c.is_zero()) ts.push_back({mono::pack(t.e), GaussRational(t.c)});
  return ParamRatFn(ParamPoly::from_terms(std::move(ts)));
}

bool is_zero(const Vec4& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string where(long a, long b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

Vec4 LatticeState4::at(long a, long b) const {
  auto it = entries.find({a, b});
  return it == entries.end() ? Vec4{0, 0, 0, 0} : it->second;
}

// Entries obtained by extracting the coefficient rows of the two F, G equations.
ExactMatrix matrix_m(TransferTag tag, const Rational& a, const Rational& b, const Rational& k) {
  ExactMatrix m(4, 4);
  if (tag == TransferTag{0, 0}) {
    m(0, 0) = poly({{{0, 0, 0, 1, 0}, 8*(k*k)*(b - 1)*(2*b - 1)}, {{0, 0, 0, 0, 1}, -8*(k*k)*(b - 1)*(2*b - 1)}});
    m(0, 1) = poly({{{0, 0, 0, 0, 0}, 32*a*k*(b - 1)*(a - b*k + k)*(a + b*k - k)}});
    m(0, 2) = poly({{{0, 1, 0, 0, 0}, 8*(a - b*k + k)*(a + b*k - k)}, {{0, 0, 0, 0, 0}, -8*(a - b*k + k)*(a + b*k - k)*((a*a) + (b*b)*(k*k) - 2*b*(k*k) + (k*k))}});
    m(1, 0) = poly({{{0, 1, 0, 0, 0}, 8*(a - b*k)*(a + b*k)}, {{0, 0, 0, 0, 0}, -8*(a - b*k)*(a + b*k)*((a*a) + (b*b)*(k*k))}});
    m(1, 3) = poly({{{0, 0, 0, 0, 0}, -32*a*b*k*(a - b*k)*(a + b*k)}});
    m(2, 0) = poly({{{0, 0, 0, 0, 0}, 8*a*b*k*(a - b*k)*(a + b*k)}});
    m(2, 3) = poly({{{0, 1, 0, 0, 0}, -8*(a - b*k)*(a + b*k)}, {{0, 0, 0, 0, 0}, 8*(a - b*k)*(a + b*k)*((a*a) + (b*b)*(k*k))}});
    m(3, 0) = poly({{{0, 0, 0, 1, 0}, 8*a*k*(2*b - 1)}, {{0, 0, 0, 0, 1}, -8*a*k*(2*b - 1)}});
    m(3, 1) = poly({{{0, 1, 0, 0, 0}, -8*(a - b*k + k)*(a + b*k - k)}, {{0, 0, 0, 0, 0}, 8*(a - b*k + k)*(a + b*k - k)*((a*a) + (b*b)*(k*k) - 2*b*(k*k) + (k*k))}});
    m(3, 2) = poly({{{0, 0, 0, 0, 0}, -8*a*k*(b - 1)*(a - b*k + k)*(a + b*k - k)}});
    m(3, 3) = poly({{{0, 0, 0, 1, 0}, 8*b*(k*k)*(2*b - 1)}, {{0, 0, 0, 0, 1}, -8*b*(k*k)*(2*b - 1)}});
  } else if (tag == TransferTag{0, 2}) {
    m(0, 0) = poly({{{0, 0, 0, 1, 0}, -16*(k*k)*(b - 1)*(b + 1)}, {{0, 0, 0, 0, 1}, 16*(k*k)*(b - 1)*(b + 1)}});
    m(0, 1) = poly({{{0, 0, 0, 0, 0}, 32*a*b*(k*k*k)*(b - 1)*(b + 1)}});
    m(0, 2) = poly({{{0, 1, 0, 0, 0}, 8*b*(k*k)*(b - 1)}, {{0, 0, 0, 1, 0}, -16*b*(k*k)*(b - 1)}, {{0, 0, 0, 0, 1}, -16*b*(k*k)*(b - 1)}, {{0, 0, 0, 0, 0}, -16*b*(k*k*k*k)*(b - 1)*((b*b) + 1)}});
    m(1, 0) = poly({{{0, 1, 0, 0, 0}, 8*(k*k)*(b + 1)*(b + 2)}, {{0, 0, 0, 1, 0}, -16*b*(k*k)*(b + 1)}, {{0, 0, 0, 0, 1}, -16*b*(k*k)*(b + 1)}, {{0, 0, 0, 0, 0}, -16*(k*k*k*k)*(b + 1)*(b + 2)*((b*b) + 2*b + 2)}});
    m(1, 2) = poly({{{0, 0, 0, 1, 0}, -8*b*(k*k)*(2*b + 1)}, {{0, 0, 0, 0, 1}, 8*b*(k*k)*(2*b + 1)}});
    m(1, 3) = poly({{{0, 0, 0, 0, 0}, 32*a*k*(b + 1)*((a*a) - 2*(b*b)*(k*k) - 4*b*(k*k) - 4*(k*k))}});
    m(2, 0) = poly({{{0, 0, 0, 1, 0}, 16*a*k*(b + 1)}, {{0, 0, 0, 0, 1}, 16*a*k*(b + 1)}, {{0, 0, 0, 0, 0}, 8*a*b*(k*k*k)*(b + 1)*(b + 2)}});
    m(2, 1) = poly({{{0, 0, 0, 1, 0}, -8*(k*k)*(b + 1)*(2*b + 1)}, {{0, 0, 0, 0, 1}, 8*(k*k)*(b + 1)*(2*b + 1)}});
    m(2, 2) = poly({{{0, 0, 0, 1, 0}, 8*a*k*(2*b + 1)}, {{0, 0, 0, 0, 1}, -8*a*k*(2*b + 1)}});
    m(2, 3) = poly({{{0, 1, 0, 0, 0}, -8*b*(k*k)*(b + 1)}, {{0, 0, 0, 1, 0}, 16*(k*k)*(b + 1)*(b + 2)}, {{0, 0, 0, 0, 1}, 16*(k*k)*(b + 1)*(b + 2)}, {{0, 0, 0, 0, 0}, 16*b*(k*k*k*k)*(b + 1)*((b*b) + 2*b + 2)}});
    m(3, 0) = poly({{{0, 0, 0, 1, 0}, -16*a*k*(b + 1)}, {{0, 0, 0, 0, 1}, 16*a*k*(b + 1)}});
    m(3, 1) = poly({{{0, 1, 0, 0, 0}, -8*b*(k*k)*(b + 1)}, {{0, 0, 0, 1, 0}, 16*b*(k*k)*(b + 1)}, {{0, 0, 0, 0, 1}, 16*b*(k*k)*(b + 1)}, {{0, 0, 0, 0, 0}, 16*b*(k*k*k*k)*(b + 1)*((b*b) + 1)}});
    m(3, 2) = poly({{{0, 0, 0, 1, 0}, -16*a*b*k}, {{0, 0, 0, 0, 1}, -16*a*b*k}, {{0, 0, 0, 0, 0}, 8*a*b*k*((a*a) - 2*(b*b)*(k*k) - 2*(k*k))}});
    m(3, 3) = poly({{{0, 0, 0, 1, 0}, -8*(k*k)*(b + 1)*(4*b + 3)}, {{0, 0, 0, 0, 1}, 8*(k*k)*(b + 1)*(4*b + 3)}});
  } else if (tag == TransferTag{0, 4}) {
    m(0, 2) = poly({{{0, 0, 0, 1, 0}, 16*(k*k)*(b - 1)*(b + 1)}, {{0, 0, 0, 0, 1}, 16*(k*k)*(b - 1)*(b + 1)}, {{0, 0, 0, 0, 0}, 8*b*(k*k*k*k)*(b - 1)*(b + 1)*(b + 2)}});
    m(1, 0) = poly({{{0, 0, 0, 1, 0}, 16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, 16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 0}, 8*(k*k*k*k)*(b + 1)*(b + 2)*(b + 3)*(b + 4)}});
    m(1, 2) = poly({{{0, 0, 0, 1, 0}, 8*(k*k)*(b + 1)*(4*b + 5)}, {{0, 0, 0, 0, 1}, -8*(k*k)*(b + 1)*(4*b + 5)}});
    m(1, 3) = poly({{{0, 0, 0, 0, 0}, 32*a*(k*k*k)*(b + 1)*(b + 2)*(b + 3)}});
    m(2, 1) = poly({{{0, 0, 0, 1, 0}, 16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, -16*(k*k)*(b + 1)*(b + 3)}});
    m(2, 2) = poly({{{0, 0, 0, 1, 0}, -16*a*k*(b + 1)}, {{0, 0, 0, 0, 1}, 16*a*k*(b + 1)}});
    m(2, 3) = poly({{{0, 0, 0, 1, 0}, -16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, -16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 0}, -8*b*(k*k*k*k)*(b + 1)*(b + 2)*(b + 3)}});
    m(3, 1) = poly({{{0, 0, 0, 1, 0}, -16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, -16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 0}, -8*b*(k*k*k*k)*(b + 1)*(b + 2)*(b + 3)}});
    m(3, 2) = poly({{{0, 0, 0, 1, 0}, 16*a*k*(b + 1)}, {{0, 0, 0, 0, 1}, 16*a*k*(b + 1)}, {{0, 0, 0, 0, 0}, 8*a*b*(k*k*k)*(b + 1)*(b + 2)}});
    m(3, 3) = poly({{{0, 0, 0, 1, 0}, 16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, -16*(k*k)*(b + 1)*(b + 3)}});
  } else if (tag == TransferTag{0, 6}) {
    m(1, 2) = poly({{{0, 0, 0, 1, 0}, -16*(k*k)*(b + 1)*(b + 3)}, {{0, 0, 0, 0, 1}, 16*(k*k)*(b + 1)*(b + 3)}});
  } else if (tag == TransferTag{-1, 0}) {
    m(0, 2) = poly({{{1, 0, 0, 0, 0}, 4*a*(2*a - 1)}});
    m(1, 0) = poly({{{1, 0, 0, 0, 0}, 4*a*(2*a - 1)}});
    m(2, 0) = poly({{{1, 0, 0, 0, 0}, -4*b*k*(2*a - 1)}});
    m(2, 3) = poly({{{1, 0, 0, 0, 0}, -4*(a - 1)*(2*a - 1)}});
    m(3, 1) = poly({{{1, 0, 0, 0, 0}, -4*(a - 1)*(2*a - 1)}});
    m(3, 2) = poly({{{1, 0, 0, 0, 0}, 4*k*(2*a - 1)*(b - 1)}});
  } else if (tag == TransferTag{-1, 2}) {
    m(3, 2) = poly({{{1, 0, 0, 0, 0}, -4*b*k*(2*a - 1)}});
  } else if (tag == TransferTag{-2, 0}) {
    m(0, 2) = poly({{{0, 0, 1, 0, 0}, -8*a*(a - 1)}});
    m(1, 0) = poly({{{0, 0, 1, 0, 0}, -8*a*(a - 1)}});
    m(2, 0) = poly({{{0, 0, 1, 0, 0}, 8*b*k*(a - 1)}});
    m(2, 3) = poly({{{0, 0, 1, 0, 0}, 8*(a - 2)*(a - 1)}});
    m(3, 1) = poly({{{0, 0, 1, 0, 0}, 8*(a - 2)*(a - 1)}});
    m(3, 2) = poly({{{0, 0, 1, 0, 0}, -8*k*(a - 1)*(b - 1)}});
  } else if (tag == TransferTag{-2, 2}) {
    m(3, 2) = poly({{{0, 0, 1, 0, 0}, 8*b*k*(a - 1)}});
  } else {
    throw std::invalid_argument("matrix_m: unknown transfer tag");
  }
  return m;
}

ParamRatFn det_m_closed(const Rational& a, const Rational& b, const Rational& k) {
  ParamRatFn l2 = ParamRatFn::var(Var::L2);
  Rational kb = k * b, kb1 = k * (b - 1);
  Rational s1 = a * a - kb * kb, s2 = a * a - kb1 * kb1;
  ParamRatFn r(-4096 * s1 * s1 * s2 * s2);
  for (const Rational& x : {a + kb1, a - kb1, a + kb, a - kb}) r *= l2 - ParamRatFn(x * x);
  return r;
}

bool det_m_vanishes(const Rational& a, const Rational& b, const Rational& k) {
  Rational kb = k * b, kb1 = k * (b - 1);
  return a * a == kb * kb || a * a == kb1 * kb1;
}

Cell start_point_ttw(long p, long q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be positive and coprime");
  return {-p, q % 2 ? q : q + 1};
}

namespace {

LatticeState4 fill_from(LatticeState4 s, const Vec4& seed) {
  const auto [a0, b0] = s.start;
  if (!is_zero(seed)) s.entries[s.start] = seed;
  for (long a = a0; a <= 2; ++a)
    for (long b = b0; b >= kTtwLowestColumn; b -= 2) {
      if (a == a0 && b == b0) continue;
      Rational ra(a), rb(b);
      std::vector<ParamRatFn> rhs(4, ParamRatFn(0));
      bool any = false;
      for (const auto& tag : kTransferTags) {
        if (tag.da == 0 && tag.db == 0) continue;
        auto it = s.entries.find({a + tag.da, b + tag.db});
        if (it == s.entries.end()) continue;
        auto v = matrix_m(tag, ra, rb, s.k).apply({it->second.begin(), it->second.end()});
        for (size_t i = 0; i < 4; ++i) rhs[i] -= v[i];
        any = true;
      }
      if (!any || std::all_of(rhs.begin(), rhs.end(), [](const ParamRatFn& x) { return x.is_zero(); })) continue;
      ExactMatrix m = matrix_m({0, 0}, ra, rb, s.k);
      std::vector<ParamRatFn> x;
      if (!det_m_vanishes(ra, rb, s.k)) {
        x = solve_linear(m, rhs);
      } else {
        auto sol = solve_particular(m, rhs);
        if (!sol) throw TtwError("inconsistent recurrence at singular point " + where(a, b), {a, b});
        x = std::move(*sol);
      }
      Vec4 c{x[0], x[1], x[2], x[3]};
      if (!is_zero(c)) s.entries[{a, b}] = std::move(c);
    }
  return s;
}

struct StartData {
  LatticeState4 empty;
  std::vector<std::vector<ParamRatFn>> kernel;
};

StartData start_data(long p, long q) {
  StartData d;
  d.empty.k = Rational(p, q);
  d.empty.start = start_point_ttw(p, q);
  const auto [a0, b0] = d.empty.start;
  ExactMatrix m0 = matrix_m({0, 0}, Rational(a0), Rational(b0), d.empty.k);
  Rref<ParamRatFn> r = rref(m0);
  auto free = free_columns(r, 4);
  if (free.size() != 2) throw TtwError("M at the start point does not have rank 2", d.empty.start);
  d.empty.free_columns = {free[0], free[1]};
  d.kernel = nullspace(m0);
  return d;
}

LatticeState4 combine(const LatticeState4& x, const ParamRatFn& cx, const LatticeState4& y, const ParamRatFn& cy) {
  LatticeState4 out = x;
  out.entries.clear();
  for (const auto& [cell, v] : x.entries) out.entries[cell] = {v[0] * cx, v[1] * cx, v[2] * cx, v[3] * cx};
  for (const auto& [cell, v] : y.entries) {
    auto [it, fresh] = out.entries.try_emplace(cell, Vec4{0, 0, 0, 0});
    for (size_t i = 0; i < 4; ++i) it->second[i] += v[i] * cy;
  }
  std::erase_if(out.entries, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

}  // namespace

LatticeState4 lattice_fill_ttw(long p, long q, const std::array<ParamRatFn, 2>& free) {
  StartData d = start_data(p, q);
  Vec4 seed{0, 0, 0, 0};
  for (size_t j = 0; j < 2; ++j)
    if (!free[j].is_zero())
      for (size_t i = 0; i < 4; ++i) seed[i] += d.kernel[j][i] * free[j];
  return fill_from(d.empty, seed);
}

BoundaryReport boundary_check(const LatticeState4& s) {
  BoundaryReport r;
  auto fail = [&](const Cell& c, int comp, const char* rule) {
    r.failures.push_back(std::string(rule) + ": component " + std::to_string(comp + 1) + " at " +
                         where(c.first, c.second));
  };
  for (const auto& [cell, v] : s.entries) {
    auto [a, b] = cell;
    for (int i = 0; i < 4; ++i) {
      if (v[i].is_zero()) continue;
      if (a >= 1) fail(cell, i, "row above 0 not zero");
      else if (b <= -1) fail(cell, i, "column b <= -1 not zero");
      else if (a == 0 && (i == 0 || i == 2)) fail(cell, i, "row 0 carries an A component");
      else if (a == s.start.first && b == 1 && i == 2) fail(cell, i, "third component at (a0, 1)");
    }
  }
  return r;
}

namespace {

// Value at a fixed generic point of the parameters.
GaussRational sample(const ParamPoly& p) {
  static const Rational point[] = {Rational(37, 11), Rational(-53, 7), Rational(71, 13), Rational(-29, 17),
                                   Rational(43, 19)};
  GaussRational out;
  for (const auto& t : p.terms()) {
    GaussRational m = t.c;
    for (int v = 0; v < 5; ++v)
      for (int e = mono::exponent(t.key, static_cast<Var>(v)); e > 0; --e) m *= point[v];
    out += m;
  }
  return out;
}

// Smallest-degree polynomial vector c over the given columns with rows·c = 0, found degree by
// degree as a linear system for the monomial coefficients.  Assumes a one-dimensional kernel.
std::vector<ParamPoly> minimal_kernel(const std::vector<std::vector<ParamPoly>>& rows, const std::vector<size_t>& cols) {
  unsigned mask = 0;
  int row_degree = 0;
  for (const auto& row : rows)
    for (size_t j : cols) {
      mask |= row[j].var_mask();
      row_degree = std::max(row_degree, row[j].total_degree());
    }
  std::vector<Var> vars;
  for (int v = 0; v < kNumVars; ++v)
    if (mask >> v & 1u) vars.push_back(static_cast<Var>(v));
  const int bound = static_cast<int>(rows.size()) * row_degree;
  for (int d = 0; d <= bound; ++d) {
    std::vector<uint64_t> monos{0};
    for (Var v : vars) {
      size_t n = monos.size();
      for (size_t i = 0; i < n; ++i)
        for (uint64_t m = monos[i] + mono::unit(v); mono::degree(m) <= d; m += mono::unit(v)) monos.push_back(m);
    }
    std::map<std::pair<size_t, uint64_t>, size_t> eq;
    std::vector<std::tuple<size_t, size_t, GaussRational>> entries;
    for (size_t i = 0; i < cols.size(); ++i)
      for (size_t u = 0; u < monos.size(); ++u)
        for (size_t r = 0; r < rows.size(); ++r)
          for (const auto& t : rows[r][cols[i]].terms()) {
            auto [it, fresh] = eq.try_emplace({r, t.key + monos[u]}, eq.size());
            entries.emplace_back(it->second, i * monos.size() + u, t.c);
          }
    Matrix<GaussRational> m(eq.size(), cols.size() * monos.size());
    for (auto& [r, c, v] : entries) m(r, c) += v;
    auto kernel = nullspace(m);
    if (kernel.empty()) continue;
    std::vector<ParamPoly> out(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
      std::vector<ParamPoly::Term> ts;
      for (size_t u = 0; u < monos.size(); ++u)
        if (!kernel[0][i * monos.size() + u].is_zero()) ts.push_back({monos[u], kernel[0][i * monos.size() + u]});
      out[i] = ParamPoly::from_terms(std::move(ts));
    }
    return out;
  }
  throw std::logic_error("minimal_kernel: no polynomial kernel vector");
}

// Row echelon basis over Q, grown one vector at a time.
struct Echelon {
  std::vector<std::vector<GaussRational>> rows;
  std::vector<size_t> lead;
  // Adds v if it is independent of the rows so far.
  bool extend(std::vector<GaussRational> v) {
    for (size_t e = 0; e < rows.size(); ++e) {
      GaussRational f = v[lead[e]];
      if (f.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] -= f * rows[e][i];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const GaussRational& z) { return !z.is_zero(); });
    if (nz == v.end()) return false;
    GaussRational inv = GaussRational(1) / *nz;
    for (auto& z : v) z *= inv;
    lead.push_back(static_cast<size_t>(nz - v.begin()));
    rows.push_back(std::move(v));
    return true;
  }
};

const uint64_t kHlMask = (uint64_t{0xff} << mono::shift(Var::H)) | (uint64_t{0xff} << mono::shift(Var::L2));

int hl_degree(const ParamPoly& p) {
  int out = 0;
  for (const auto& t : p.terms()) out = std::max(out, mono::exponent(t.key, Var::H) + mono::exponent(t.key, Var::L2));
  return out;
}

// p as Σ m·p_m over monomials m in H, L2, with p_m free of H and L2.
std::map<uint64_t, ParamPoly> by_hl_monomial(const ParamPoly& p) {
  std::map<uint64_t, std::vector<ParamPoly::Term>> parts;
  for (const auto& t : p.terms()) {
    uint64_t hl = t.key & kHlMask;
    uint64_t m = hl ? mono::unit(Var::H) * mono::exponent(t.key, Var::H) + mono::unit(Var::L2) * mono::exponent(t.key, Var::L2) : 0;
    parts[m].push_back({t.key - m, t.c});
  }
  std::map<uint64_t, ParamPoly> out;
  for (auto& [m, ts] : parts) out.emplace(m, ParamPoly::from_terms(std::move(ts)));
  return out;
}

// Content of p as a polynomial in H, L2 over the ring of the other parameters.
ParamPoly hl_content(const ParamPoly& p) {
  ParamPoly g;
  for (const auto& [m, part] : by_hl_monomial(p)) g = gcd(g, part);
  return g;
}

}  // namespace

TtwClearing clear_denominators_ttw(long p, long q) {
  StartData d = start_data(p, q);
  std::array<LatticeState4, 2> basis;
  for (size_t j = 0; j < 2; ++j) {
    const auto& w = d.kernel[j];
    basis[j] = fill_from(d.empty, {w[0], w[1], w[2], w[3]});
  }
  // Per non-polynomial entry: f_0 M_0 + f_1 M_1 ≡ 0 mod D, with D the H, L2 part of the denominator
  // and the remaining factors (units over the field of α, β, γ) moved into M_j.
  struct Pending {
    std::array<ParamPoly, 2> num;
    ParamPoly den;
  };
  std::vector<Pending> pending;
  std::set<Cell> cells;
  for (const auto& b : basis)
    for (const auto& [c, v] : b.entries) cells.insert(c);
  int bound = 0;
  for (const auto& c : cells) {
    std::array<Vec4, 2> v{basis[0].at(c.first, c.second), basis[1].at(c.first, c.second)};
    for (size_t i = 0; i < 4; ++i) {
      std::array<ParamPoly, 2> hl, rest;
      for (size_t j = 0; j < 2; ++j) {
        rest[j] = hl_content(v[j][i].den());
        hl[j] = exact_quotient(v[j][i].den(), rest[j]);
      }
      ParamPoly den = lcm(hl[0], hl[1]);
      if (den.is_constant()) continue;
      pending.push_back({{v[0][i].num() * exact_quotient(den, hl[0]) * rest[1],
                          v[1][i].num() * exact_quotient(den, hl[1]) * rest[0]},
                         den});
      bound += hl_degree(den);
    }
  }
  for (int deg = 0; deg <= bound; ++deg) {
    std::vector<uint64_t> monos;
    for (int t = 0; t <= deg; ++t)
      for (int h = 0; h <= t; ++h) monos.push_back(static_cast<uint64_t>(h) * mono::unit(Var::H) + (t - h) * mono::unit(Var::L2));
    const size_t n = monos.size(), unknowns = 2 * n;
    // Independent conditions are picked at a sample point, then solved exactly.
    std::vector<std::vector<ParamPoly>> picked;
    Echelon rows_basis;
    for (size_t i = 0; i < pending.size() && picked.size() < unknowns; ++i) {
      std::map<uint64_t, std::vector<ParamPoly>> rows;
      for (size_t u = 0; u < unknowns; ++u) {
        ParamPoly r = remainder(pending[i].num[u / n].mul_term(monos[u % n], 1), pending[i].den);
        for (auto& [key, part] : by_hl_monomial(r)) {
          auto [it, fresh] = rows.try_emplace(key, unknowns);
          it->second[u] = std::move(part);
        }
      }
      for (auto& [key, row] : rows) {
        if (picked.size() == unknowns) break;
        std::vector<GaussRational> val(unknowns);
        for (size_t u = 0; u < unknowns; ++u) val[u] = sample(row[u]);
        if (rows_basis.extend(std::move(val))) picked.push_back(std::move(row));
      }
    }
    if (picked.size() == unknowns) continue;
    std::vector<ParamPoly> c(unknowns);
    if (picked.empty()) {
      c[n] = 1;
    } else {
      // Among the solutions, the one whose leading unknown is least: unknowns ordered by the degree
      // of m, then by the monomial order on m, then f_1 below f_0.  Its support is the shortest
      // prefix of that ordering on which the columns become dependent.
      std::vector<size_t> cols;
      Echelon cols_basis;
      for (size_t o = 0; o < unknowns; ++o) {
        size_t u = (1 - o % 2) * n + o / 2;
        cols.push_back(u);
        std::vector<GaussRational> col(picked.size());
        for (size_t r = 0; r < picked.size(); ++r) col[r] = sample(picked[r][u]);
        if (!cols_basis.extend(std::move(col))) break;
      }
      std::vector<ParamPoly> v = minimal_kernel(picked, cols);
      GaussRational scale = GaussRational(1) / v.back().lead().c;
      for (size_t i = 0; i < cols.size(); ++i) c[cols[i]] = v[i] * scale;
    }
    std::array<ParamPoly, 2> fv;
    for (size_t u = 0; u < unknowns; ++u) fv[u / n] += c[u].mul_term(monos[u % n], 1);
    LatticeState4 out = combine(basis[0], ParamRatFn(fv[0]), basis[1], ParamRatFn(fv[1]));
    // Leftover denominators can only involve α, β, γ.
    ParamPoly extra(1);
    for (const auto& [cell, v] : out.entries)
      for (const auto& e : v) {
        if (e.is_polynomial()) continue;
        if (e.den().depends_on(Var::H) || e.den().depends_on(Var::L2))
          throw TtwError("clearing left a denominator in H or L2", cell);
        extra = lcm(extra, e.den());
      }
    if (!extra.is_one()) {
      for (auto& x : fv) x *= extra;
      out = combine(basis[0], ParamRatFn(fv[0]), basis[1], ParamRatFn(fv[1]));
    }
    return {{ParamRatFn(fv[0]), ParamRatFn(fv[1])}, std::move(out), std::max(hl_degree(fv[0]), hl_degree(fv[1]))};
  }
  throw TtwError("no polynomial choice of the free parameters", d.empty.start);
}

PotentialPair build_fg_ttw(const LatticeState4& s) {
  PotentialPair r{FunElement(Ring::Trig, s.k), FunElement(Ring::Trig, s.k), Variant::Quantum};
  for (const auto& [cell, v] : s.entries) {
    auto [a, b] = cell;
    Rational ra(a);
    r.F += FunElement::trig_term(s.k, ra, b, 0, v[0]) + FunElement::trig_term(s.k, ra, b - 2, 1, v[2]);
    r.G += FunElement::trig_term(s.k, ra, b - 1, 0, v[1]) + FunElement::trig_term(s.k, ra, b - 1, 1, v[3]);
  }
  return r;
}

}  // namespace superint
