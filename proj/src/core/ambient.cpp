#include "core/ambient.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrsurf::ambient {

namespace {
void check_spec(const AmbientSpec& spec, const Vec& coords) {
  if (spec.n < 2) throw std::invalid_argument("ambient: need n >= 2");
  if (static_cast<int>(coords.size()) != spec.n)
    throw std::invalid_argument("ambient: coordinate dimension mismatch");
}
}  // namespace

bool point_valid(const AmbientSpec& spec, const Vec& coords) {
  check_spec(spec, coords);
  if (spec.model == Model::HalfSpace) return coords.back() > 0.0;
  return norm2(coords) < 1.0;
}

ConformalFactor conformal_factor(const AmbientSpec& spec, const Vec& coords) {
  check_spec(spec, coords);
  if (!point_valid(spec, coords))
    throw std::domain_error("conformal_factor: point outside the model domain");

  ConformalFactor out;
  out.grad.assign(spec.n, 0.0);
  out.hess = Matrix(spec.n, spec.n);
  if (spec.model == Model::HalfSpace) {
    out.F = coords.back();
    out.grad.back() = 1.0;
    // Hessian identically zero.
  } else {
    out.F = 0.5 * (1.0 - norm2(coords));
    for (int i = 0; i < spec.n; ++i) {
      out.grad[i] = -coords[i];
      out.hess(i, i) = -1.0;
    }
  }
  return out;
}

double rho_to_ball_radius(double rho, bool* saturated) {
  if (saturated) *saturated = false;
  if (rho < 0.0) throw std::domain_error("rho_to_ball_radius: rho < 0");
  if (rho > rho_saturation_cap)
    throw std::domain_error("rho_to_ball_radius: rho beyond saturation cap");
  const double s = std::tanh(0.5 * rho);
  const double below_one = std::nextafter(1.0, 0.0);
  if (s >= 1.0) {
    if (saturated) *saturated = true;
    return below_one;
  }
  return s;
}

double ball_radius_to_rho(double s) {
  if (!(s >= 0.0) || s >= 1.0)
    throw std::domain_error("ball_radius_to_rho: need 0 <= s < 1");
  return 2.0 * std::atanh(s);
}

}  // namespace hrsurf::ambient
