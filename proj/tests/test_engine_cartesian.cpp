#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "superint/engine_cartesian.hpp"
#include "superint/phase.hpp"
#include "test_support.hpp"

using namespace superint;
using namespace superint::testing;

namespace {

struct PQ {
  long p, q;
};

std::vector<PQ> coprime_pairs(long max_product) {
  std::vector<PQ> out;
  for (long p = 1; p <= max_product; ++p)
    for (long q = 1; p * q <= max_product; ++q)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

std::string label(long p, long q, int sign, Variant v) {
  return std::to_string(sign * p) + "/" + std::to_string(q) + " " + variant_name(v);
}

LatticeState2 scaled(LatticeState2 s, const ParamRatFn& c) {
  for (auto& [pt, v] : s.entries)
    for (auto& x : v) x *= c;
  return s;
}

bool same_entries(const LatticeState2& x, const LatticeState2& y) {
  std::set<GridPoint> pts;
  for (const auto& [pt, v] : x.entries) pts.insert(pt);
  for (const auto& [pt, v] : y.entries) pts.insert(pt);
  for (const auto& pt : pts)
    if (x.at(pt.first, pt.second) != y.at(pt.first, pt.second)) return false;
  return true;
}

// p, q from a reduced k = p/q > 0
PQ from_k(const Rational& k) { return {k.num().get_si(), k.den().get_si()}; }

}  // namespace

TEST_SUITE("engine-cartesian") {

TEST_CASE("J factor") {
  CHECK(j_factor(Rational(3, 2), Rational(1, 2), Rational(3)).is_zero());
  CHECK(j_factor(Rational(1), Rational(0), Rational(5, 7)) == (ParamRatFn(1) - L2) * (ParamRatFn(1) - L2) * 2);
  CHECK(j_factor(Rational(-1, 2), Rational(-1, 2), Rational(1)).is_zero());
  CHECK_FALSE(j_factor(Rational(-1, 2), Rational(1, 2), Rational(3)).is_zero());
}

TEST_CASE("transfer steps") {
  Rational k(3);
  Vec2 z{0, 0};
  for (Variant v : {Variant::Quantum, Variant::Classical}) {
    Vec2 r = transfer_step(z, z, Rational(1, 2), Rational(-1, 2), k, v);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());
    // (2a − 1) kills every vertical step into a = 1/2
    CHECK(vertical_step(Rational(1, 2), Rational(-1, 2), k, v).is_zero());
    // (2b − 1) kills every horizontal step into b = 1/2
    CHECK(horizontal_step(Rational(-1, 2), Rational(1, 2), k, v).is_zero());
  }
  // classical k = 3: one vertical step from the start
  Vec2 c = transfer_step(z, {1, 1}, Rational(-1, 2), Rational(-1, 2), k, Variant::Classical);
  CHECK(c[0] == H / (L2 * 4));
  CHECK(c[1] == H * 3 / (L2 * 4));
  CHECK_THROWS_AS(transfer_step(z, {1, 1}, Rational(-3, 2), Rational(-1, 2), k, Variant::Quantum), LatticeError);
}

TEST_CASE("start points and walls") {
  CHECK(start_point(3, 1, 1) == GridPoint{Rational(-3, 2), Rational(-1, 2)});
  CHECK(start_point(2, 1, 1) == GridPoint{Rational(-1), Rational(-1, 2)});
  CHECK(start_point(1, 1, -1) == GridPoint{Rational(-1, 2), Rational(-1, 2)});
  CHECK(start_point(4, 3, 1) == GridPoint{Rational(-2), Rational(-3, 2)});
  CHECK(start_point(3, 4, 1) == GridPoint{Rational(-3, 2), Rational(-2)});
  CHECK_THROWS(start_point(2, 4, 1));
  CHECK_THROWS(start_point(0, 1, 1));
  for (auto [p, q] : coprime_pairs(40)) {
    auto [a, b] = start_point(p, q, 1);
    Rational k(p, q);
    CHECK(a * a == k * k * b * b);
  }
  CHECK(zero_walls(3, 5) == GridPoint{Rational(1, 2), Rational(1, 2)});
  CHECK(zero_walls(4, 3) == GridPoint{Rational(1), Rational(1, 2)});
  CHECK(zero_walls(3, 2) == GridPoint{Rational(1, 2), Rational(1)});
}

TEST_CASE("classical k = 3 example") {
  LatticeState2 s = lattice_fill(3, 1, 1, Variant::Classical);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.at(Rational(-3, 2), Rational(-1, 2))[0] == ParamRatFn(1));
  auto [scale, cleared] = clear_denominators(s);
  CHECK(scale == L2.num());
  PotentialPair fg = build_fg(cleared);
  FunElement e3 = FunElement::exp_term(Rational(3), Rational(-3, 2), Rational(-3, 2));
  FunElement e1 = FunElement::exp_term(Rational(3), Rational(-1, 2), Rational(-3, 2));
  CHECK(fg.F == e3 * L2 + e1 * (H / 4));
  CHECK(fg.G == e3 * L2 + e1 * (H * 3 / 4));
  CHECK(residuals_fg(fg, cartesian_system(Rational(3))).is_zero());
}

TEST_CASE("single point for k = 1") {
  for (Variant v : {Variant::Quantum, Variant::Classical})
    for (int sign : {1, -1}) {
      LatticeState2 s = lattice_fill(1, 1, sign, v);
      CHECK(s.entries.size() == 1);
      PotentialPair fg = build_fg(clear_denominators(s).second);
      SeparableSystem sys = cartesian_system(s.k);
      CHECK(residuals_abcd(build_canonical(fg, sys), sys, v).is_zero());
    }
}

TEST_CASE("fill agrees with the path sum") {
  for (auto [p, q] : coprime_pairs(15))
    for (int sign : {1, -1})
      for (Variant v : {Variant::Quantum, Variant::Classical}) {
        CAPTURE(label(p, q, sign, v));
        LatticeState2 fill = lattice_fill(p, q, sign, v, {be, ga});
        LatticeState2 paths = path_sum_oracle(p, q, sign, v, {be, ga});
        CHECK(same_entries(fill, paths));
      }
}

TEST_CASE("support stays below the zero walls") {
  for (auto [p, q] : coprime_pairs(24))
    for (Variant v : {Variant::Quantum, Variant::Classical}) {
      CAPTURE(label(p, q, 1, v));
      LatticeState2 s = lattice_fill(p, q, 1, v, {be, ga});
      CHECK_FALSE(s.entries.empty());
      for (const auto& [pt, c] : s.entries) {
        CHECK(pt.first >= s.start.first);
        CHECK(pt.second >= s.start.second);
        CHECK(pt.first < s.walls.first);
        CHECK(pt.second < s.walls.second);
        // odd/odd: rows and columns at most p/2 and q/2 away from the start
        if (p % 2 && q % 2) {
          CHECK(pt.first - s.start.first < Rational(p, 2));
          CHECK(pt.second - s.start.second < Rational(q, 2));
        }
      }
      if (p % 2 == 0)
        for (Rational b = s.start.second; b < s.walls.second; b += 1) {
          // row a = 0 carries the special vector with upper component zero
          CHECK(s.at(Rational(0), b)[0].is_zero());
        }
    }
}

TEST_CASE("classical variant decouples") {
  for (auto [p, q] : coprime_pairs(12)) {
    LatticeState2 sa = lattice_fill(p, q, 1, Variant::Classical, {1, 0});
    LatticeState2 sb = lattice_fill(p, q, 1, Variant::Classical, {0, 1});
    for (const auto& [pt, c] : sa.entries) CHECK(c[1].is_zero());
    for (const auto& [pt, c] : sb.entries) CHECK(c[0].is_zero());
  }
}

TEST_CASE("seed freedom") {
  for (auto [p, q] : coprime_pairs(10))
    for (Variant v : {Variant::Quantum, Variant::Classical}) {
      LatticeState2 sym = lattice_fill(p, q, 1, v, {be, ga});
      LatticeState2 e1 = lattice_fill(p, q, 1, v, {1, 0});
      LatticeState2 e2 = lattice_fill(p, q, 1, v, {0, 1});
      LatticeState2 combo = scaled(e1, be);
      for (const auto& [pt, c] : scaled(e2, ga).entries) {
        auto& slot = combo.entries[pt];
        slot = {slot[0] + c[0], slot[1] + c[1]};
      }
      CHECK(same_entries(sym, combo));
      CHECK(lattice_fill(p, q, 1, v, {0, 0}).entries.empty());
    }
}

TEST_CASE("clearing denominators") {
  LatticeState2 poly;
  poly.k = Rational(1);
  poly.entries[{Rational(-1, 2), Rational(-1, 2)}] = {H, L2 + 1};
  CHECK(clear_denominators(poly).first == ParamPoly(1));
  for (auto [p, q] : coprime_pairs(8)) {
    LatticeState2 s = lattice_fill(p, q, 1, Variant::Quantum);
    auto [scale, cleared] = clear_denominators(s);
    for (const auto& [pt, c] : cleared.entries) {
      CHECK(c[0].is_polynomial());
      CHECK(c[1].is_polynomial());
    }
    ParamRatFn inv = ParamRatFn(scale).inverse();
    for (const auto& [pt, c] : cleared.entries) CHECK(c[0] * inv == s.at(pt.first, pt.second)[0]);
  }
}

TEST_CASE("end to end residuals vanish") {
  std::vector<Rational> ks;
  for (long p = 1; p <= 7; p += 2)
    for (long q = 1; q <= 7; q += 2)
      if (std::gcd(p, q) == 1) ks.emplace_back(p, q);
  for (auto k : {Rational(2), Rational(4), Rational(2, 3), Rational(4, 3)}) ks.push_back(k);
  for (const auto& k : ks)
    for (Variant v : {Variant::Quantum, Variant::Classical}) {
      auto [p, q] = from_k(k);
      CAPTURE(label(p, q, 1, v));
      LatticeState2 s = clear_denominators(lattice_fill(p, q, 1, v)).second;
      PotentialPair fg = build_fg(s);
      SeparableSystem sys = cartesian_system(k);
      CHECK(residuals_fg(fg, sys).is_zero());
      CHECK(residuals_abcd(build_canonical(fg, sys), sys, v).is_zero());
    }
}

TEST_CASE("negative k") {
  for (auto [p, q] : coprime_pairs(6)) {
    LatticeState2 s = clear_denominators(lattice_fill(p, q, -1, Variant::Quantum)).second;
    SeparableSystem sys = cartesian_system(s.k);
    CHECK(residuals_abcd(build_canonical(build_fg(s), sys), sys, Variant::Quantum).is_zero());
  }
}

TEST_CASE("expanded operator commutes with H") {
  for (auto [p, q] : coprime_pairs(6)) {
    CAPTURE(label(p, q, 1, Variant::Quantum));
    LatticeState2 s = clear_denominators(lattice_fill(p, q, 1, Variant::Quantum)).second;
    SeparableSystem sys = cartesian_system(s.k);
    DiffOp l = expand_params(build_canonical(build_fg(s), sys), sys);
    CHECK(commutator(l, build_H(sys)).is_zero());
  }
}

TEST_CASE("a perturbed lattice fails the checks") {
  LatticeState2 s = clear_denominators(lattice_fill(5, 3, 1, Variant::Quantum)).second;
  CHECK(s.entries.size() == 6);
  SeparableSystem sys = cartesian_system(s.k);
  CanonicalOp good = build_canonical(build_fg(s), sys);
  CHECK(commutator(expand_params(good, sys), build_H(sys)).is_zero());
  auto& c = s.entries.at({Rational(-3, 2), Rational(-1, 2)});
  c[0] += 1;
  PotentialPair bad = build_fg(s);
  CHECK_FALSE(residuals_fg(bad, sys).is_zero());
  CanonicalOp worse = good;
  worse.A += FunElement::exp_term(s.k, Rational(-3, 2), Rational(-5, 6));
  CHECK_FALSE(commutator(expand_params(worse, sys), build_H(sys)).is_zero());
}

TEST_CASE("classical constant Poisson-commutes with the Hamiltonian") {
  for (auto [p, q] : coprime_pairs(6)) {
    CAPTURE(label(p, q, 1, Variant::Classical));
    LatticeState2 s = clear_denominators(lattice_fill(p, q, 1, Variant::Classical)).second;
    SeparableSystem sys = cartesian_system(s.k);
    PhaseFn l = expand_params_classical(build_canonical(build_fg(s), sys), sys);
    CHECK(poisson_bracket(classical_H(sys), l).is_zero());
  }
}

}
