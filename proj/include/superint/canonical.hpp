#pragma once

#include <map>
#include <utility>

#include "superint/system.hpp"

namespace superint {

// A ∂1∂2 + B ∂1 + C ∂2 + D with H, L2 appearing as parameters placed on the right.
struct CanonicalOp {
  FunElement A, B, C, D;

  static CanonicalOp zero(const SeparableSystem& sys) { return {sys.zero(), sys.zero(), sys.zero(), sys.zero()}; }
  bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero(); }
  CanonicalOp& operator+=(const CanonicalOp& o);
  CanonicalOp lmul(const FunElement& f) const;
  CanonicalOp operator*(const ParamRatFn& c) const;
  CanonicalOp map_coeffs(const std::function<ParamRatFn(const ParamRatFn&)>& f) const;
  friend bool operator==(const CanonicalOp&, const CanonicalOp&) = default;
};

enum class ReduceOrder { D1First, D2First };

// Rewrites ∂1² → f1 H + L2 − v1 and ∂2² → f2 H − L2 − v2.  Reduced forms of
// ∂1^m ∂2^n are memoised, so one reducer should be reused per system.
class Reducer {
 public:
  explicit Reducer(SeparableSystem sys, ReduceOrder order = ReduceOrder::D1First)
      : sys_(std::move(sys)), order_(order) {}
  CanonicalOp reduce(const DiffOp& x);
  const CanonicalOp& basis(int m, int n);
  const SeparableSystem& system() const { return sys_; }

 private:
  SeparableSystem sys_;
  ReduceOrder order_;
  std::map<std::pair<int, int>, CanonicalOp> memo_;
};

CanonicalOp canonical_reduce(const DiffOp& x, const SeparableSystem& sys, ReduceOrder order = ReduceOrder::D1First);

// The operator A∂1∂2 + B∂1 + C∂2 + D with no parameters present.
DiffOp to_diffop(const CanonicalOp& c, const SeparableSystem& sys);

struct ParamDependenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Replaces H^j L2^k by right composition with the operators H^j L2^k.
class ParamExpander {
 public:
  explicit ParamExpander(SeparableSystem sys);
  DiffOp expand(const CanonicalOp& c);
  const DiffOp& hl_power(int j, int k);

 private:
  SeparableSystem sys_;
  DiffOp h_, l2_;
  std::map<std::pair<int, int>, DiffOp> powers_;
};

DiffOp expand_params(const CanonicalOp& c, const SeparableSystem& sys);

// Maximum over terms of 2(H-degree + L2-degree) + derivative order of the basis element.
int symmetry_order(const CanonicalOp& c);

// Splits every coefficient by its H^j L2^k monomials; throws ParamDependenceError
// if a denominator involves H or L2.
std::map<std::pair<int, int>, FunElement> split_params(const FunElement& f);

}  // namespace superint
