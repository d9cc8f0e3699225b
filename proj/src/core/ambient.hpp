#pragma once

// Conformal models of hyperbolic n-space: the metric is <,>/F^2 with
//   half-space:  F(x) = x_n            on { x_n > 0 }
//   ball:        F(x) = (1 - |x|^2)/2  on { |x| < 1 }
// plus the radius conversions between the ball model and geodesic distance
// from the origin.

#include "core/smallmat.hpp"

namespace hrsurf::ambient {

enum class Model { HalfSpace, Ball };

struct AmbientSpec {
  int n = 2;
  Model model = Model::HalfSpace;
};

bool point_valid(const AmbientSpec& spec, const Vec& coords);

struct ConformalFactor {
  double F = 0.0;
  Vec grad;     // Euclidean gradient of F
  Matrix hess;  // Euclidean Hessian of F (0 resp. -Id)
};

// Throws std::domain_error when the point leaves the model domain,
// std::invalid_argument on dimension mismatch or n < 2.
ConformalFactor conformal_factor(const AmbientSpec& spec, const Vec& coords);

// Euclidean distance from the origin of the point at geodesic distance rho,
// ball model:  s = tanh(rho/2).  Monotone, stays strictly below 1; once the
// true value is no longer representable below 1 the result saturates at
// 1 - ulp and *saturated (if given) is set.  rho < 0 or rho > 700 throws
// std::domain_error.
double rho_to_ball_radius(double rho, bool* saturated = nullptr);

// Inverse map: rho = 2 atanh(s), needs 0 <= s < 1.
double ball_radius_to_rho(double s);

inline constexpr double rho_saturation_cap = 700.0;

}  // namespace hrsurf::ambient
