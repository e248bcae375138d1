#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "superint/canonical.hpp"
#include "superint/symmetry.hpp"

namespace superint {

enum class SystemKind { Cartesian, Ttw };
const char* system_name(SystemKind s);

struct JobConfig {
  SystemKind system = SystemKind::Cartesian;
  Rational k = Rational(1);
  Variant variant = Variant::Quantum;
  std::optional<std::array<ParamRatFn, 2>> seed;  // start vector (Cartesian) or free values (TTW)
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError for malformed or out-of-scope configurations.
void validate(const JobConfig& cfg);

SeparableSystem system_for(SystemKind s, const Rational& k);

struct Construction {
  JobConfig cfg;
  SeparableSystem sys;
  std::array<ParamRatFn, 2> seed;  // as used, before scaling
  ParamPoly scale;                 // K with every entry polynomial for the seed times K
  PotentialPair fg;
  CanonicalOp op;
  int order = -1;
};

// Lattice fill, denominator clearing, F and G, canonical form.  Without a seed the
// Cartesian start vector is (1, 1) and the TTW free values come from clear_denominators_ttw.
Construction construct(const JobConfig& cfg);

struct Verification {
  ResidualReport residuals;
  std::optional<bool> commutes;  // expanded commutator (Poisson bracket when classical) with H
  bool ok() const { return residuals.is_zero() && commutes.value_or(true); }
};

Verification verify_operator(const CanonicalOp& op, const SeparableSystem& sys, Variant v, bool full_commutator);

}  // namespace superint
