#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "superint/param_ratfn.hpp"

namespace superint {

struct ExprError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact expression in H, L2, alpha, beta, gamma (or α, β, γ) and i with integer
// literals, + - * / ^, parentheses and implicit multiplication ("4L2", "3i/4").
ParamRatFn parse_param_expr(const std::string& text);

// Two expressions separated by a top-level comma.
std::array<ParamRatFn, 2> parse_seed(const std::string& text);

}  // namespace superint
