#pragma once

// Graphs over the half-space model that are invariant under horizontal
// translations: u = lambda(y) + sum_i l_i x_i.  Closed forms for the minimal
// families and for the flat (S_2 = 0) screw family in n = 2, the first-order
// reduction of the constant-S_2 equation, and its RK4 solver.
//
// The reduction: with z = l^2 + (n-1) lambda'^2, W^2 = 1 + y^2 l^2 +
// y^2 lambda'^2, the unknown psi = (z/W^2) y^{4-n} obeys
//   psi' = (2-n) l^2 y^{3-n} / W^2 - 2 S_2 y^{1-n},
// and the slope comes back through
//   lambda'^2 = (l^2 y^{4-n} - psi (1 + y^2 l^2)) / (psi y^2 - (n-1) y^{4-n}).

#include <optional>

#include "core/profile_curve.hpp"
#include "core/smallmat.hpp"

namespace hrsurf::parabolic {

// Closed-form S_r = 0 translational family:
//   n == r:  lambda = c ln y              on (0, inf)
//   n >  r:  lambda = (r/(n-r)) asin(y^{(n-r)/r} / c)   on (0, c^{r/(n-r)})
// Sampling is strictly interior for n > r (both derivative columns blow up at
// the ends); for n == r the table covers [y_min, y_max].
ProfileCurve minimal_profile(int n, int r, double c, int samples, double y_min = 0.25,
                             double y_max = 4.0);

// Pointwise closed-form values of the same family.
double minimal_lambda(int n, int r, double c, double y);
double minimal_dlambda(int n, int r, double c, double y);
double minimal_ddlambda(int n, int r, double c, double y);

// n = 2 screw family with vanishing extrinsic curvature (S_2 = 0, single
// pitch l > 0, constant c > 0):
//   lambda = -sqrt(c) ln(sqrt(c) + sqrt(c - l^2 y^2)) + sqrt(c) ln(l y)
//            + sqrt(c - l^2 y^2)         on (0, sqrt(c)/l),
// with lambda' = sqrt(c - l^2 y^2)/y, so the slope closes flat at the right
// endpoint while lambda itself diverges logarithmically at y = 0.
ProfileCurve flat_screw_profile(double c, double l, int samples);
double flat_screw_lambda(double c, double l, double y);
double flat_screw_dlambda(double c, double l, double y);
double flat_screw_ddlambda(double c, double l, double y);

// Slope constant of the entire graph lambda = c ln y with constant second
// mean curvature H_2 = k:  c = sqrt(n k / ((n-2) - n k)), valid for n >= 3
// and 0 < k < (n-2)/n.
double entire_log_slope(int n, double k);

struct ScrewOdeParams {
  int n = 2;
  double s2 = 0.0;  // target S_2 (not H_2)
  double l = 0.0;   // single pitch magnitude; the jet uses (l, 0, ..., 0)
  double d = 0.0;   // conserved value of psi when psi' has no forcing
  std::optional<double> psi0;  // explicit initial value overrides d
  double y0 = 0.0;
  double y1 = 0.0;
  int steps = 1024;
};

// Fixed-step RK4 on (psi, lambda) with step halving until the endpoint values
// move by less than 1e-9; rows are reported on the requested grid.
// Throws SingularDomainError / DomainExhaustedError with the last good y when
// the slope recovery breaks down inside [y0, y1].
ProfileCurve screw_ode_solve(const ScrewOdeParams& params);

}  // namespace hrsurf::parabolic
