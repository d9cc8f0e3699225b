#pragma once

// Barrier constants induced by the critical entire rotational graph, the one
// with H_r exactly at the entire/compact threshold (n-r)/n.  Capping it over
// a geodesic ball of hyperbolic radius R dominates every compact
// H_r-hypersurface with boundary in the slice, prescribed H_r in
// (0, (n-r)/n], and projection inside the ball, so its height and boundary
// slope at R are usable a-priori bounds.

#include "core/rotational.hpp"

namespace hrsurf::barriers {

struct BarrierQuery {
  int n = 3;
  int r = 2;
  double R = 1.0;  // hyperbolic radius of the enclosing ball
};

// n > r >= 1 (no entire barrier exists for r = n) and R > 0.
void validate_query(const BarrierQuery& q);

// lambda(R) of the critical graph: the depth of the barrier cap.
double height_bound(const BarrierQuery& q);

// lambda'(R) = sqrt(p(R)/q(R)) of the critical graph: the cap's slope at the
// contact sphere.
double gradient_bound(const BarrierQuery& q);

}  // namespace hrsurf::barriers
