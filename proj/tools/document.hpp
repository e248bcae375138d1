#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "superint/pipeline.hpp"

namespace superint {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OperatorDocument {
  SystemKind system = SystemKind::Cartesian;
  Rational k = Rational(1);
  Variant variant = Variant::Quantum;
  int order = -1;
  ParamPoly scale;
  std::array<ParamRatFn, 2> seed{0, 0};
  CanonicalOp op;
  // Expanded operator Σ F_{mn} ∂1^m ∂2^n (quantum) or Σ F_{mn} p1^m p2^n (classical).
  std::optional<std::map<std::pair<int, int>, FunElement>> expanded;

  friend bool operator==(const OperatorDocument&, const OperatorDocument&);
};

OperatorDocument make_document(const Construction& c, bool with_expanded);

// JSON text with a fixed field order, two-space indent and a trailing newline.
// Throws DocumentError when a coefficient is not polynomial in the parameters.
std::string serialize(const OperatorDocument& doc);
// Throws DocumentError on malformed input.
OperatorDocument parse_document(const std::string& text);

}  // namespace superint
