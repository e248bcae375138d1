#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "superint/canonical.hpp"

namespace superint {

enum class Variant { Quantum, Classical };
const char* variant_name(Variant v);

struct PotentialPair {
  FunElement F, G;
  Variant variant = Variant::Quantum;
};

struct ResidualReport {
  std::vector<std::string> names;
  std::vector<FunElement> residuals;
  bool is_zero() const;
};

struct AbcParts {
  FunElement A, B, C;
};

// quantum: A = F, B = −F2/2 − G1, C = −F1/2 + G2; classical: A = F, B = −G1, C = G2.
AbcParts assemble_abc(const PotentialPair& p);

// Integrability conditions for D: the compatibility of the two defining
// equations, and the constant-term equation with D eliminated.
ResidualReport residuals_fg(const PotentialPair& p, const SeparableSystem& sys);

struct IntegrabilityError : std::runtime_error {
  IntegrabilityError(const std::string& what, FunElement mismatch)
      : std::runtime_error(what + ": " + mismatch.str()), mismatch(std::move(mismatch)) {}
  FunElement mismatch;
};

// D from its defining equations, with zero integration constant.
FunElement integrate_d(const AbcParts& abc, const SeparableSystem& sys, Variant variant);

CanonicalOp build_canonical(const PotentialPair& p, const SeparableSystem& sys);

// The four residuals (∂1∂2, ∂1, ∂2, constant) of the symmetry condition.
ResidualReport residuals_abcd(const CanonicalOp& c, const SeparableSystem& sys, Variant variant);

}  // namespace superint
