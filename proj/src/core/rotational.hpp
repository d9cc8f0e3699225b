#pragma once

// Rotationally invariant hypersurfaces with constant H_r, generated by a
// profile lambda(rho) over the geodesic distance rho from a fixed axis.
// First integral: with
//   I(xi) = int_0^xi sinh^{n-1}(s) / cosh^{r-1}(s) ds,
//   p = (n H_r I + d)^{2/r},   q = sinh^{2(n-r)/r}(xi) - p,
// the slope is lambda' = sqrt(p/q).  For d = 0 the dichotomy is governed by
// the threshold (n-r)/n: at or below it the graph is entire, above it q has a
// first positive zero rho_0 where the profile closes with a vertical tangent
// and reflection doubles it to a compact sphere.

#include <iosfwd>

#include "core/profile_curve.hpp"
#include "core/report.hpp"
#include "core/smallmat.hpp"
#include "core/symfunc.hpp"

namespace hrsurf::rotational {

struct RotationalSpec {
  int n = 2;
  int r = 1;
  double hr = 0.0;
  double d = 0.0;
};

void validate_spec(const RotationalSpec& spec);  // n >= 2, 1 <= r <= n, hr > 0, d >= 0

double threshold(int n, int r);  // (n-r)/n

enum class Classification { EntireGraph, CompactSphere };
const char* classification_name(Classification c);

// d = 0 only (throws std::invalid_argument otherwise): entire iff hr <= (n-r)/n.
Classification classify(const RotationalSpec& spec);
// Exact integer comparison num * n <= den * (n-r) for hr = num/den.
Classification classify_rational(int n, int r, long long num, long long den);

// profile integrand sinh^{n-1}/cosh^{r-1} at s
double profile_integrand(int n, int r, double s);

// I(xi) by adaptive quadrature (absolute 1e-12 plus a few-ulp relative term).
double integral_I(int n, int r, double xi);

// Incremental evaluator for the many-evaluation paths: checkpoints I at a
// fixed stride and integrates only the remainder.  Not thread-safe; use one
// instance per solve.
class IntegralCache {
 public:
  IntegralCache(int n, int r);
  double operator()(double xi);

 private:
  int n_, r_;
  Vec checkpoints_;  // I at stride * k
  static constexpr double stride_ = 0.25;
};

struct PQ {
  double p = 0.0;
  double q = 0.0;
};

// Requires n H_r I(xi) + d >= 0 (throws std::domain_error otherwise).
PQ pq(const RotationalSpec& spec, double xi);

// First positive zero of q for a compact spec (d = 0), bisection to 1e-12.
// Throws std::logic_error when the spec classifies as entire.
double rho0(const RotationalSpec& spec);

// lambda(rho) = int_0^rho sqrt(p/q), lambda' and lambda'' at a point (d = 0).
// For compact specs rho must stay in [0, rho0]; the quadrature switches to
// the substitution xi = rho0 - s^2 so the boundary square root is benign.
double lambda_at(const RotationalSpec& spec, double rho);
double dlambda_at(const RotationalSpec& spec, double rho);
double ddlambda_at(const RotationalSpec& spec, double rho);

// Same value through tanh-sinh nodes; independent cross-check of lambda_at.
double lambda_tanh_sinh(const RotationalSpec& spec, double rho);

// Sampled profile: entire specs are tabulated on [0, rho_max] (truncated),
// compact ones on [0, rho0] with a final singular row (NaN derivatives).
ProfileCurve profile(const RotationalSpec& spec, int samples, double rho_max = 30.0);

// k_1 = ... = k_{n-1} = coth(rho) lambda' / W,  k_n = lambda'' / W^3,
// W = sqrt(1 + lambda'^2); upward orientation, rho > 0.
symfunc::PrincipalCurvatures principal_curvatures(const RotationalSpec& spec, double rho,
                                                  double dlambda, double ddlambda);

// Pointwise H_r(principal curvatures) - spec.hr at the interior samples, plus
// a finite-difference re-derivation of the flux form
//   d/drho [ sinh^{n-r}(rho) (lambda'^2 / (1+lambda'^2))^{r/2} ]
//     = n H_r sinh^{n-1}(rho) / cosh^{r-1}(rho)
// with analytic slopes at rho +- h; that residual must stay below 1e-6
// (relative) or the report throws NumericError.  The curve's metadata must
// agree with the spec.
CurvatureReport verify_constant_hr(const ProfileCurve& curve, const RotationalSpec& spec);

struct ClosedProfile {
  ProfileCurve upper;
  double t0 = 0.0;  // gluing height: the reflected half is 2 t0 - lambda
};

// Reflection closure of a compact profile across its vertical-tangent end.
// Throws std::logic_error when the spec classifies as entire.
ClosedProfile glue_closed_profile(const ProfileCurve& curve, const RotationalSpec& spec);

// (rho, t) polyline tracing the closed curve for plotting: up the graph half,
// then back along the reflection to the axis; CSV with columns rho,t.
void write_closed_path_csv(const ClosedProfile& closed, std::ostream& out);

// Trend checks towards the threshold (all directions asserted, values kept):
//  - lambda(rho) monotone in H_r at fixed rho in {1,2,5} for a descending grid
//  - rho0 at H_r = thr*(1+10^-j), j=1..4: strictly increasing in j
//  - sup_{[0,5]} lambda at H_r = thr*10^-j, j=1..4: strictly decreasing
struct LimitChecks {
  Vec h_grid;                     // descending toward 0
  std::vector<Vec> lambda_table;  // lambda_table[i][j] = lambda(rho_j) at h_grid[i]
  Vec probe_rhos{1.0, 2.0, 5.0};
  bool lambda_monotone_in_h = false;

  Vec rho0_h;       // thr*(1+10^-j)
  Vec rho0_values;  // grows as H_r decreases toward thr
  bool rho0_increasing = false;

  Vec small_h;      // thr*10^-j
  Vec sup_lambda;   // sup over [0,5] (= lambda(5), the profile is increasing)
  bool sup_decreasing = false;

  bool directions_ok() const {
    return lambda_monotone_in_h && rho0_increasing && sup_decreasing;
  }
};

LimitChecks limit_checks_detail(int n, int r);

// Report form: one point per consecutive step of each trend, with
//   location = 100*phase + step index (phase 1 = lambda-vs-H at fixed rho,
//              2 = rho0 growth, 3 = sup decay),
//   s_r / h_r = the two measured values of the step,
//   residual  = the directed step (positive exactly when the trend holds),
// so min_residual > 0 certifies all directions at once.
CurvatureReport limit_checks(int n, int r);

}  // namespace hrsurf::rotational
