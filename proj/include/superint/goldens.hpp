#pragma once

#include <string>
#include <vector>

#include "superint/canonical.hpp"
#include "superint/engine_ttw.hpp"

namespace superint {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};
using CheckList = std::vector<Check>;
bool all_ok(const CheckList& checks);

// Reference k = 1/3 TTW operator, written for the potential β/sin²kθ + γ/cos²kθ
// (β and γ exchanged relative to ttw_system), and its two free-parameter values.
struct TtwReferenceK13 {
  FunElement A, B, C, D;
  ParamRatFn value_a, value_b;  // C_{-1,3}[0] and C_{0,3}[3]
};
TtwReferenceK13 ttw_reference_k13();

// Free values of C_{a0,b0} that give two prescribed entry values.
std::array<ParamRatFn, 2> ttw_free_for(long p, long q, Cell c1, int i1, const ParamRatFn& v1, Cell c2, int i2,
                                       const ParamRatFn& v2);

CheckList golden_cartesian_k3_classical();
CheckList golden_cartesian_k3_quantum();
CheckList golden_ttw_k2();
CheckList golden_ttw_k13(bool full_commutator);
CheckList golden_det_identity(int samples, unsigned seed);
CheckList golden_k3_algebra();

// The classical k = 3 operator split by parity in the momenta, against the classical
// limits of the third- and fourth-order quantum operators.
CheckList k3_classical_comparisons(const CanonicalOp& op);

}  // namespace superint
