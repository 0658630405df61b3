#pragma once

#include "asymclust/network.hpp"

namespace asymclust::testing {

// Directed weights x1->x2 = 1, x2->x3 = 2, x3->x1 = 2 and the reverse edges
// x2->x1 = 2, x3->x2 = 3, x1->x3 = 3.
inline Network three_node() {
  return Network({"x1", "x2", "x3"}, {{0, 1, 3}, {2, 0, 2}, {2, 3, 0}});
}

// Cycle y1->y2->y3->y1 at 1/2, reverse edges at 1.
inline Network cycle() {
  return Network({"y1", "y2", "y3"}, {{0, 0.5, 1}, {1, 0, 0.5}, {0.5, 1, 0}});
}

inline Network two_node(double alpha, double beta) {
  return Network({"p", "q"}, {{0, alpha}, {beta, 0}});
}

}  // namespace asymclust::testing
