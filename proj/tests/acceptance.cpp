#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "superint/engine_cartesian.hpp"
#include "superint/goldens.hpp"
#include "superint/pipeline.hpp"
#include "test_support.hpp"

using namespace superint;
using namespace superint::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;  // printed under the result line
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void absorb(const CheckList& checks) {
    for (const auto& c : checks) require(c.ok, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

std::string kname(const Rational& k) { return "k=" + k.str(); }

bool same_entries(const LatticeState2& x, const LatticeState2& y) {
  std::set<GridPoint> pts;
  for (const auto& [pt, v] : x.entries) pts.insert(pt);
  for (const auto& [pt, v] : y.entries) pts.insert(pt);
  for (const auto& pt : pts)
    if (x.at(pt.first, pt.second) != y.at(pt.first, pt.second)) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  o.absorb(golden_cartesian_k3_classical());
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.absorb(golden_ttw_k2());
  return o;
}

Outcome criterion3() {
  Outcome o;
  CheckList checks = golden_ttw_k13(true);
  o.absorb(checks);
  for (const auto& c : checks)
    if (c.detail.find("discarded constant") != std::string::npos) o.notes.push_back(c.name + ": " + c.detail);
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.absorb(golden_det_identity(50, 4242u));
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<Rational> ks;
  for (long p = 1; p <= 35; p += 2)
    for (long q = 1; p * q <= 35; q += 2)
      if (std::gcd(p, q) == 1) ks.emplace_back(p, q);
  for (auto k : {Rational(2), Rational(4), Rational(2, 3)}) ks.push_back(k);
  int commutators = 0;
  for (const auto& k : ks) {
    Construction c = construct({SystemKind::Cartesian, k, Variant::Quantum, std::nullopt});
    o.require(residuals_fg(c.fg, c.sys).is_zero(), "F, G residuals " + kname(k));
    bool small = k.num() * k.den() <= 9;
    Verification v = verify_operator(c.op, c.sys, Variant::Quantum, small);
    o.require(v.residuals.is_zero(), "A, B, C, D residuals " + kname(k));
    if (small) {
      ++commutators;
      o.require(*v.commutes, "[L, H] = 0 " + kname(k));
    }
  }
  o.notes.push_back(std::to_string(ks.size()) + " values of k, " + std::to_string(commutators) +
                    " full commutators");
  return o;
}

Outcome criterion6() {
  Outcome o;
  int cases = 0;
  for (long p = 1; p <= 72; ++p)
    for (long q = 1; q <= 72; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        GridPoint s = start_point(p, q, sign), w = zero_walls(p, q);
        Rational points = (w.first - s.first) * (w.second - s.second);
        if (points > Rational(36)) continue;
        for (Variant v : {Variant::Quantum, Variant::Classical}) {
          ++cases;
          LatticeState2 fill = lattice_fill(p, q, sign, v, {be, ga});
          LatticeState2 paths = path_sum_oracle(p, q, sign, v, {be, ga});
          o.require(same_entries(fill, paths), kname(cartesian_k(p, q, sign)) + " " + variant_name(v));
        }
      }
    }
  o.notes.push_back(std::to_string(cases) + " lattices compared entry by entry");
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.absorb(golden_k3_algebra());
  return o;
}

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

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(8080);

  int field_fail = 0;
  for (int n = 0; n < 200; ++n) {
    ParamRatFn x = random_ratfn(rng), y = random_ratfn(rng), z = random_ratfn(rng);
    bool ok = (x + y) * z == x * z + y * z && x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) &&
              (x * y) * z == x * (y * z) && (x - x).is_zero() && x * ParamRatFn(1) == x;
    if (!y.is_zero()) ok = ok && (x / y) * y == x;
    field_fail += !ok;
  }
  o.require(field_fail == 0, std::to_string(field_fail) + " of 200 field-axiom cases");

  int ring_fail = 0;
  for (Ring ring : {Ring::Exp, Ring::Trig}) {
    Rational k = ring == Ring::Exp ? Rational(-5, 3) : Rational(3, 4);
    for (int n = 0; n < 100; ++n) {
      FunElement x = random_fun(rng, ring, k), y = random_fun(rng, ring, k);
      bool ok = x.diff(Coord::U1).diff(Coord::U2) == x.diff(Coord::U2).diff(Coord::U1);
      for (Coord u : {Coord::U1, Coord::U2}) ok = ok && (x * y).diff(u) == x.diff(u) * y + x * y.diff(u);
      ring_fail += !ok;
    }
  }
  o.require(ring_fail == 0, std::to_string(ring_fail) + " of 200 product-rule / mixed-partial cases");

  int red_fail = 0;
  for (const SeparableSystem& sys : {cartesian_system(Rational(3)), ttw_system(Rational(1, 3))}) {
    Reducer r1(sys, ReduceOrder::D1First), r2(sys, ReduceOrder::D2First);
    for (int n = 0; n < 25; ++n) {
      CanonicalOp c = r1.reduce(random_op(rng, sys, 6));
      red_fail += !(r1.reduce(to_diffop(c, sys)) == c && r2.reduce(to_diffop(c, sys)) == c);
    }
  }
  o.require(red_fail == 0, std::to_string(red_fail) + " of 50 reduction idempotence cases");

  // residuals_abcd = 0 ⇒ expanded commutator (Poisson bracket when classical) = 0
  std::vector<JobConfig> cfgs;
  for (long p = 1; p <= 9; ++p)
    for (long q = 1; p * q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int sign : {1, -1})
        for (Variant v : {Variant::Quantum, Variant::Classical})
          cfgs.push_back({SystemKind::Cartesian, Rational(sign * p, q), v, std::nullopt});
      if (p * q <= 6) cfgs.push_back({SystemKind::Ttw, Rational(p, q), Variant::Quantum, std::nullopt});
    }
  int zero_residuals = 0;
  for (const auto& cfg : cfgs) {
    Construction c = construct(cfg);
    Verification v = verify_operator(c.op, c.sys, cfg.variant, true);
    std::string name = std::string(system_name(cfg.system)) + " " + kname(cfg.k) + " " + variant_name(cfg.variant);
    if (v.residuals.is_zero()) {
      ++zero_residuals;
      o.require(*v.commutes, "commutator for " + name);
    }
    o.require(v.residuals.is_zero(), "residuals for " + name);
  }
  o.notes.push_back(std::to_string(zero_residuals) + " of " + std::to_string(cfgs.size()) +
                    " constructed instances with zero residuals, all commuting");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "golden k=3 classical Cartesian F, G, D", 1, criterion1},
      {2, "golden k=2 TTW vectors C_{-2,1}, C_{-1,1}, C_{0,1}", 5, criterion2},
      {3, "golden k=1/3 TTW A, B, C, D, order 6, [L, H] = 0", 60, criterion3},
      {4, "determinant identity on 50 exact samples", 10, criterion4},
      {5, "Cartesian quantum sweep (odd p, q, pq <= 35; k = 2, 4, 2/3)", 300, criterion5},
      {6, "lattice fill equals path-sum oracle (rectangles <= 36 points)", 0, criterion6},
      {7, "k=3 quantum algebra [Ki, H] = 0, [K1, K3] = 6iK2 - 9K1", 30, criterion7},
      {8, "property suites and residuals => commutator", 0, criterion8},
  };
  int failed = 0;
  double total = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += s;
    bool in_time = c.limit_s == 0 || s < c.limit_s;
    if (!in_time) o.notes.push_back("runtime over the limit");
    bool ok = o.ok && in_time;
    failed += !ok;
    char limit[32] = "";
    if (c.limit_s > 0) std::snprintf(limit, sizeof limit, ", limit %g s", c.limit_s);
    std::printf("%s  criterion %d: %s  [%.2f s%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, s, limit);
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - failed, total);
  return failed == 0 ? 0 : 1;
}
