#include "core/parabolic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"

namespace hrsurf::parabolic {

namespace {

void check_minimal_args(int n, int r, double c) {
  if (n < 2) throw std::invalid_argument("minimal family: need n >= 2");
  if (r < 1 || r > n) throw std::invalid_argument("minimal family: need 1 <= r <= n");
  if (!(c > 0.0)) throw std::invalid_argument("minimal family: need c > 0");
}

// right end of the arcsin branch for n > r
double minimal_domain_end(int n, int r, double c) {
  return std::pow(c, static_cast<double>(r) / (n - r));
}

void check_minimal_point(int n, int r, double c, double y) {
  if (!(y > 0.0)) throw std::domain_error("minimal family: need y > 0");
  if (n > r && !(y < minimal_domain_end(n, r, c)))
    throw std::domain_error("minimal family: y beyond the arcsin branch");
}

}  // namespace

double minimal_lambda(int n, int r, double c, double y) {
  check_minimal_args(n, r, c);
  check_minimal_point(n, r, c, y);
  if (n == r) return c * std::log(y);
  const double b = static_cast<double>(n - r) / r;
  return (1.0 / b) * std::asin(std::pow(y, b) / c);
}

double minimal_dlambda(int n, int r, double c, double y) {
  check_minimal_args(n, r, c);
  check_minimal_point(n, r, c, y);
  if (n == r) return c / y;
  const double b = static_cast<double>(n - r) / r;
  const double a = b - 1.0;  // (n - 2r)/r
  return std::pow(y, a) / std::sqrt(c * c - std::pow(y, 2.0 * b));
}

double minimal_ddlambda(int n, int r, double c, double y) {
  check_minimal_args(n, r, c);
  check_minimal_point(n, r, c, y);
  if (n == r) return -c / (y * y);
  const double b = static_cast<double>(n - r) / r;
  const double a = b - 1.0;
  const double rad = c * c - std::pow(y, 2.0 * b);
  return std::pow(y, a - 1.0) * (a * rad + b * std::pow(y, 2.0 * b)) / std::pow(rad, 1.5);
}

ProfileCurve minimal_profile(int n, int r, double c, int samples, double y_min, double y_max) {
  check_minimal_args(n, r, c);
  if (samples < 2) throw std::invalid_argument("minimal_profile: need samples >= 2");

  ProfileCurve curve;
  curve.family = ProfileFamily::ParabolicMinimal;
  curve.param_name = "y";
  curve.n = n;
  curve.r = r;
  curve.target = 0.0;
  curve.target_is_hr = false;  // S_r = 0
  curve.c = c;

  if (n == r) {
    if (!(y_min > 0.0) || !(y_max > y_min))
      throw std::invalid_argument("minimal_profile: need 0 < y_min < y_max");
    curve.domain_a = 0.0;
    curve.domain_b = std::numeric_limits<double>::infinity();
    curve.truncated = true;
    for (int k = 0; k <= samples; ++k) {
      const double y = y_min + (y_max - y_min) * k / samples;
      curve.rows.push_back({y, minimal_lambda(n, r, c, y), minimal_dlambda(n, r, c, y),
                            minimal_ddlambda(n, r, c, y)});
    }
  } else {
    const double end = minimal_domain_end(n, r, c);
    curve.domain_a = 0.0;
    curve.domain_b = end;
    curve.endpoint_singular = true;  // the slope turns vertical at the right end
    for (int k = 1; k <= samples; ++k) {
      const double y = end * k / (samples + 1);
      curve.rows.push_back({y, minimal_lambda(n, r, c, y), minimal_dlambda(n, r, c, y),
                            minimal_ddlambda(n, r, c, y)});
    }
  }
  return curve;
}

namespace {
void check_flat_screw(double c, double l, double y) {
  if (!(c > 0.0) || !(l > 0.0))
    throw std::invalid_argument("flat screw family: need c > 0 and l > 0");
  if (!(y > 0.0) || !(y < std::sqrt(c) / l))
    throw std::domain_error("flat screw family: need 0 < y < sqrt(c)/l");
}
}  // namespace

double flat_screw_lambda(double c, double l, double y) {
  check_flat_screw(c, l, y);
  const double rc = std::sqrt(c);
  const double s = std::sqrt(c - l * l * y * y);
  return -rc * std::log(rc + s) + rc * std::log(l * y) + s;
}

double flat_screw_dlambda(double c, double l, double y) {
  check_flat_screw(c, l, y);
  return std::sqrt(c - l * l * y * y) / y;
}

double flat_screw_ddlambda(double c, double l, double y) {
  check_flat_screw(c, l, y);
  return -c / (y * y * std::sqrt(c - l * l * y * y));
}

ProfileCurve flat_screw_profile(double c, double l, int samples) {
  if (!(c > 0.0) || !(l > 0.0))
    throw std::invalid_argument("flat_screw_profile: need c > 0 and l > 0");
  if (samples < 2) throw std::invalid_argument("flat_screw_profile: need samples >= 2");
  const double end = std::sqrt(c) / l;

  ProfileCurve curve;
  curve.family = ProfileFamily::ScrewFlat;
  curve.param_name = "y";
  curve.n = 2;
  curve.r = 2;
  curve.target = 0.0;
  curve.target_is_hr = false;
  curve.c = c;
  curve.l = {l};
  curve.domain_a = 0.0;
  curve.domain_b = end;
  curve.endpoint_singular = true;  // lambda' blows up towards y = 0
  for (int k = 1; k <= samples; ++k) {
    const double y = end * k / (samples + 1);
    curve.rows.push_back({y, flat_screw_lambda(c, l, y), flat_screw_dlambda(c, l, y),
                          flat_screw_ddlambda(c, l, y)});
  }
  return curve;
}

double entire_log_slope(int n, double k) {
  if (n < 3) throw std::invalid_argument("entire_log_slope: need n >= 3");
  const double cap = static_cast<double>(n - 2) / n;
  if (!(k > 0.0) || !(k < cap))
    throw std::domain_error("entire_log_slope: need 0 < k < (n-2)/n");
  return std::sqrt(n * k / ((n - 2) - n * k));
}

namespace {

struct OdeEval {
  double dpsi;
  double dlambda;
  double slope_sq;
  double dslope_sq;  // d(lambda'^2)/dy along the solution
};

struct OdeRhs {
  int n;
  double s2;
  double l;

  OdeEval operator()(double y, double psi) const {
    const double l2 = l * l;
    const double y4n = std::pow(y, 4 - n);
    const double num = l2 * y4n - psi * (1.0 + y * y * l2);
    const double den = psi * y * y - (n - 1) * y4n;
    const double scale = std::max({std::abs(psi * y * y), std::abs((n - 1) * y4n), 1e-300});
    if (std::abs(den) <= 1e-13 * scale)
      throw SingularDomainError("screw_ode_solve: slope-recovery denominator vanished", y);
    double slope_sq = num / den;
    if (slope_sq < 0.0) {
      if (slope_sq < -1e-12)
        throw DomainExhaustedError("screw_ode_solve: slope turned imaginary", y);
      slope_sq = 0.0;
    }
    const double w2 = 1.0 + y * y * l2 + y * y * slope_sq;
    OdeEval out;
    out.slope_sq = slope_sq;
    out.dpsi = (2 - n) * l2 * std::pow(y, 3 - n) / w2 - 2.0 * s2 * std::pow(y, 1 - n);
    out.dlambda = std::sqrt(slope_sq);

    // chain rule through N/D with psi' = dpsi
    const double dnum = l2 * (4 - n) * std::pow(y, 3 - n) - out.dpsi * (1.0 + y * y * l2) -
                        psi * 2.0 * y * l2;
    const double dden =
        out.dpsi * y * y + 2.0 * psi * y - (n - 1) * (4 - n) * std::pow(y, 3 - n);
    out.dslope_sq = (dnum * den - num * dden) / (den * den);
    return out;
  }
};

struct OdeRun {
  Vec psi;     // psi at nodes of the integration grid
  Vec lambda;  // lambda at the same nodes
};

OdeRun rk4_run(const OdeRhs& rhs, double y0, double y1, double psi_init, int steps) {
  OdeRun run;
  run.psi.resize(static_cast<std::size_t>(steps) + 1);
  run.lambda.resize(static_cast<std::size_t>(steps) + 1);
  const double h = (y1 - y0) / steps;
  double psi = psi_init, lam = 0.0;
  run.psi[0] = psi;
  run.lambda[0] = lam;
  for (int k = 0; k < steps; ++k) {
    const double y = y0 + h * k;
    const OdeEval e1 = rhs(y, psi);
    const OdeEval e2 = rhs(y + 0.5 * h, psi + 0.5 * h * e1.dpsi);
    const OdeEval e3 = rhs(y + 0.5 * h, psi + 0.5 * h * e2.dpsi);
    const OdeEval e4 = rhs(y + h, psi + h * e3.dpsi);
    psi += (h / 6.0) * (e1.dpsi + 2.0 * e2.dpsi + 2.0 * e3.dpsi + e4.dpsi);
    lam += (h / 6.0) * (e1.dlambda + 2.0 * e2.dlambda + 2.0 * e3.dlambda + e4.dlambda);
    run.psi[static_cast<std::size_t>(k) + 1] = psi;
    run.lambda[static_cast<std::size_t>(k) + 1] = lam;
  }
  return run;
}

}  // namespace

ProfileCurve screw_ode_solve(const ScrewOdeParams& params) {
  if (params.n < 2) throw std::invalid_argument("screw_ode_solve: need n >= 2");
  if (!(params.y0 > 0.0) || !(params.y1 > params.y0))
    throw std::invalid_argument("screw_ode_solve: need 0 < y0 < y1");
  if (params.steps < 1) throw std::invalid_argument("screw_ode_solve: need steps >= 1");
  if (params.l < 0.0) throw std::invalid_argument("screw_ode_solve: need l >= 0");

  const OdeRhs rhs{params.n, params.s2, params.l};
  const double psi_init = params.psi0.value_or(params.d);

  // step halving until both endpoint values settle to 1e-9
  int refine = 1;
  OdeRun coarse = rk4_run(rhs, params.y0, params.y1, psi_init, params.steps);
  OdeRun fine;
  for (int attempt = 0;; ++attempt) {
    fine = rk4_run(rhs, params.y0, params.y1, psi_init, params.steps * refine * 2);
    const double dl = std::abs(fine.lambda.back() - coarse.lambda.back());
    const double dp = std::abs(fine.psi.back() - coarse.psi.back());
    const double tol = 1e-9 * std::max(1.0, std::abs(fine.lambda.back()));
    if (dl <= tol && dp <= tol) break;
    if (attempt >= 6)
      throw NumericError("screw_ode_solve: step halving did not settle to 1e-9");
    coarse = std::move(fine);
    refine *= 2;
  }
  refine *= 2;  // `fine` resolution relative to the requested grid

  ProfileCurve curve;
  curve.family = ProfileFamily::ScrewOde;
  curve.param_name = "y";
  curve.n = params.n;
  curve.r = 2;
  curve.target = params.s2;
  curve.target_is_hr = false;
  curve.d = psi_init;
  if (params.n >= 2) {
    curve.l.assign(static_cast<std::size_t>(params.n) - 1, 0.0);
    curve.l[0] = params.l;
  }
  curve.domain_a = params.y0;
  curve.domain_b = params.y1;

  const double h = (params.y1 - params.y0) / params.steps;
  for (int k = 0; k <= params.steps; ++k) {
    const double y = params.y0 + h * k;
    const double psi = fine.psi[static_cast<std::size_t>(k) * refine];
    const double lam = fine.lambda[static_cast<std::size_t>(k) * refine];
    const OdeEval e = rhs(y, psi);
    double ddl;
    if (e.dlambda > 1e-12) {
      ddl = e.dslope_sq / (2.0 * e.dlambda);
    } else {
      ddl = (std::abs(e.dslope_sq) < 1e-10) ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    }
    curve.rows.push_back({y, lam, e.dlambda, ddl});
  }
  return curve;
}

}  // namespace hrsurf::parabolic
