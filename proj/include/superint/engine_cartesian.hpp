#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "superint/exact_matrix.hpp"
#include "superint/symmetry.hpp"

namespace superint {

using Vec2 = std::array<ParamRatFn, 2>;
using GridPoint = std::pair<Rational, Rational>;

// Coefficients (A_{a,b}, B_{a,b}) of F = Σ A e^{2aR + 2ibkθ}, G = Σ B e^{2aR + 2ibkθ}.
struct LatticeState2 {
  Rational k;
  Variant variant = Variant::Quantum;
  GridPoint start;
  GridPoint walls;  // first row a and first column b that must vanish
  std::map<GridPoint, Vec2> entries;  // nonzero entries only

  Vec2 at(const Rational& a, const Rational& b) const;
};

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// k = sign·p/q
Rational cartesian_k(long p, long q, int sign);

ParamRatFn j_factor(const Rational& a, const Rational& b, const Rational& k);

// The scalar dividing C_{a,b}: J(a,b) (quantum) or 2L2(a² − k²b²) (classical).
ParamRatFn pivot_factor(const Rational& a, const Rational& b, const Rational& k, Variant v);

// pivot·C_{a,b} in terms of C_{a−1,b} (below) and C_{a,b−1} (left).
Vec2 transfer_numerator(const Vec2& c_left, const Vec2& c_below, const Rational& a, const Rational& b,
                        const Rational& k, Variant v);
Vec2 transfer_step(const Vec2& c_left, const Vec2& c_below, const Rational& a, const Rational& b,
                   const Rational& k, Variant v);

// Vertical and horizontal step matrices, already divided by the pivot.
ExactMatrix vertical_step(const Rational& a, const Rational& b, const Rational& k, Variant v);
ExactMatrix horizontal_step(const Rational& a, const Rational& b, const Rational& k, Variant v);

GridPoint start_point(long p, long q, int sign);

// Row a = 1/2 (p odd) or 1 (p even); column b = 1/2 (q odd) or 1 (q even).
GridPoint zero_walls(long p, long q);

LatticeState2 lattice_fill(long p, long q, int sign, Variant variant, const Vec2& seed = {1, 1});

// Every entry as an explicit sum over monotone paths from the start.
LatticeState2 path_sum_oracle(long p, long q, int sign, Variant variant, const Vec2& seed = {1, 1});

// Multiplies by the monic lcm of all denominators.
std::pair<ParamPoly, LatticeState2> clear_denominators(const LatticeState2& s);

PotentialPair build_fg(const LatticeState2& s);

}  // namespace superint
