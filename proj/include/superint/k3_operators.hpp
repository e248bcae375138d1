#pragma once

#include "superint/system.hpp"

namespace superint {

// The third-order, fourth-order and rotation-type operators of the k = 3
// Cartesian system, rewritten in polar coordinates x + iy = e^{R+iθ}.
struct K3Operators {
  SeparableSystem sys;
  DiffOp H, K1, K2, K3;
};

K3Operators k3_operators();

}  // namespace superint
