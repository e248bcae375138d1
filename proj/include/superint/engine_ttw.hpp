#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superint/exact_matrix.hpp"
#include "superint/symmetry.hpp"

namespace superint {

using Vec4 = std::array<ParamRatFn, 4>;
using Cell = std::pair<long, long>;

// Offset of the neighbour C_{a+da, b+db} in M_{a,b}C_{a,b} + Σ M_tag C_{a+da,b+db} = 0.
struct TransferTag {
  int da, db;
  friend bool operator==(const TransferTag&, const TransferTag&) = default;
};
inline constexpr std::array<TransferTag, 8> kTransferTags{
    {{0, 0}, {0, 2}, {0, 4}, {0, 6}, {-1, 0}, {-1, 2}, {-2, 0}, {-2, 2}}};

// C_{a,b} = (A_{a,b,0}, B_{a,b−1,0}, A_{a,b−2,1}, B_{a,b−1,1}) with
// F = Σ A_{a,b,c} e^{2aR} s^b c^c, G likewise, s = sin 2kθ, c = cos 2kθ.
struct LatticeState4 {
  Rational k;
  Cell start;
  std::array<size_t, 2> free_columns{};  // components of C_start that are free
  std::map<Cell, Vec4> entries;           // nonzero entries only

  Vec4 at(long a, long b) const;
};

struct TtwError : std::runtime_error {
  TtwError(const std::string& what, Cell where) : std::runtime_error(what), where(where) {}
  Cell where;
};

ExactMatrix matrix_m(TransferTag tag, const Rational& a, const Rational& b, const Rational& k);

ParamRatFn det_m_closed(const Rational& a, const Rational& b, const Rational& k);
bool det_m_vanishes(const Rational& a, const Rational& b, const Rational& k);

Cell start_point_ttw(long p, long q);

// Window filled: rows a0..2, columns b0, b0−2, ..., down to this bound.
inline constexpr long kTtwLowestColumn = -7;

// The free components of C_{a0,b0} take the values in `free`.
LatticeState4 lattice_fill_ttw(long p, long q, const std::array<ParamRatFn, 2>& free = {1, 1});

struct BoundaryReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
BoundaryReport boundary_check(const LatticeState4& s);

struct TtwClearing {
  std::array<ParamRatFn, 2> free;
  LatticeState4 state;
  int degree;  // total H, L2 degree of the chosen free values
};

// Free values polynomial in H, L2 of least total degree making every entry polynomial.
// Ties go to the least leading unknown, ordering by degree, then the monomial order, with
// the second free value below the first.
TtwClearing clear_denominators_ttw(long p, long q);

PotentialPair build_fg_ttw(const LatticeState4& s);

}  // namespace superint
