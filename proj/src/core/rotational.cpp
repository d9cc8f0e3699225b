#include "core/rotational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/roots.hpp"
#include "core/serialize.hpp"

namespace hrsurf::rotational {

namespace {

void validate_nr(int n, int r) {
  if (n < 2) throw std::invalid_argument("rotational: need n >= 2");
  if (r < 1 || r > n) throw std::invalid_argument("rotational: need 1 <= r <= n");
}

void require_reduced(const RotationalSpec& spec, const char* who) {
  if (spec.d != 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": d != 0 is only supported through pq()");
}

// (n-r)*xi beyond this and sinh^{n-r} leaves double range
double overflow_cap(int n, int r) {
  return (n > r) ? 700.0 / (n - r) : std::numeric_limits<double>::infinity();
}

}  // namespace

void validate_spec(const RotationalSpec& spec) {
  validate_nr(spec.n, spec.r);
  if (!(spec.hr > 0.0)) throw std::invalid_argument("rotational: need hr > 0");
  if (spec.d < 0.0) throw std::invalid_argument("rotational: need d >= 0");
}

double threshold(int n, int r) {
  validate_nr(n, r);
  return static_cast<double>(n - r) / n;
}

const char* classification_name(Classification c) {
  return c == Classification::EntireGraph ? "EntireGraph" : "CompactSphere";
}

Classification classify(const RotationalSpec& spec) {
  validate_spec(spec);
  require_reduced(spec, "classify");
  return spec.hr <= threshold(spec.n, spec.r) ? Classification::EntireGraph
                                              : Classification::CompactSphere;
}

Classification classify_rational(int n, int r, long long num, long long den) {
  validate_nr(n, r);
  if (den <= 0 || num <= 0)
    throw std::invalid_argument("classify_rational: need num > 0 and den > 0");
  // hr = num/den vs (n-r)/n without any rounding
  return num * n <= den * static_cast<long long>(n - r) ? Classification::EntireGraph
                                                        : Classification::CompactSphere;
}

double profile_integrand(int n, int r, double s) {
  return std::pow(std::sinh(s), n - 1) / std::pow(std::cosh(s), r - 1);
}

double integral_I(int n, int r, double xi) {
  validate_nr(n, r);
  if (xi < 0.0) throw std::domain_error("integral_I: need xi >= 0");
  if (xi > overflow_cap(n, r))
    throw NumericError("integral_I: integrand overflows before xi");
  return integrate_gk15([n, r](double s) { return profile_integrand(n, r, s); }, 0.0, xi,
                        {1e-12, 1e-14, 4096});
}

IntegralCache::IntegralCache(int n, int r) : n_(n), r_(r) {
  validate_nr(n, r);
  checkpoints_.push_back(0.0);
}

double IntegralCache::operator()(double xi) {
  if (xi < 0.0) throw std::domain_error("IntegralCache: need xi >= 0");
  if (xi > overflow_cap(n_, r_))
    throw NumericError("IntegralCache: integrand overflows before xi");
  const auto f = [this](double s) { return profile_integrand(n_, r_, s); };
  // near machine accuracy: q = sinh^{2(n-r)/r} - (n hr I)^{2/r} cancels near
  // the closing radius, so I's error is the slope's noise floor there
  const QuadratureOptions tight{1e-15, 2e-16, 4096};
  const std::size_t cell = static_cast<std::size_t>(xi / stride_);
  while (checkpoints_.size() <= cell) {
    const double a = stride_ * (checkpoints_.size() - 1);
    checkpoints_.push_back(checkpoints_.back() + integrate_gk15(f, a, a + stride_, tight));
  }
  const double base = stride_ * static_cast<double>(cell);
  return checkpoints_[cell] + integrate_gk15(f, base, xi, tight);
}

namespace {

PQ pq_from_integral(const RotationalSpec& spec, double xi, double integral_value) {
  const double base = spec.n * spec.hr * integral_value + spec.d;
  if (base < 0.0)
    throw std::domain_error("pq: n H_r I + d < 0 (fractional power undefined)");
  const double e = 2.0 / spec.r;
  PQ out;
  out.p = std::pow(base, e);
  out.q = std::pow(std::sinh(xi), 2.0 * (spec.n - spec.r) / spec.r) - out.p;
  return out;
}

// q and g = sinh^{n-r} - (n hr I + d) share their sign pattern; g avoids the
// fractional powers, so the root find uses g.
double g_of(const RotationalSpec& spec, double xi, IntegralCache& cache) {
  return std::pow(std::sinh(xi), spec.n - spec.r) - (spec.n * spec.hr * cache(xi) + spec.d);
}

double slope_at(const RotationalSpec& spec, double xi, IntegralCache& cache) {
  if (xi == 0.0) return 0.0;
  const PQ v = pq_from_integral(spec, xi, cache(xi));
  if (!(v.q > 0.0)) {
    // entire graphs have q > 0 everywhere, so a non-positive value there is
    // cancellation rounding (it happens near the critical threshold once
    // 1 - (n hr I / sinh^{n-r})^{2/r} drops under machine epsilon)
    if (spec.hr <= threshold(spec.n, spec.r))
      throw NumericError("rotational slope: q lost to rounding at large rho");
    throw std::domain_error("rotational slope: q <= 0 (outside the profile)");
  }
  return std::sqrt(v.p / v.q);
}

double curvature_slope_rate(const RotationalSpec& spec, double xi, IntegralCache& cache) {
  // lambda'' via d/dxi of p/q with P = n hr I, Q = sinh^{n-r}
  const int n = spec.n, r = spec.r;
  if (xi == 0.0) return std::pow(spec.hr, 1.0 / r);
  const double e = 2.0 / r;
  const double pbase = n * spec.hr * cache(xi);
  const double pdot_base = n * spec.hr * profile_integrand(n, r, xi);
  const double p = std::pow(pbase, e);
  const double pdot = e * std::pow(pbase, e - 1.0) * pdot_base;
  const double sh = std::sinh(xi), ch = std::cosh(xi);
  const double qbase = std::pow(sh, n - r);
  const double qdot_base = (n == r) ? 0.0 : (n - r) * std::pow(sh, n - r - 1) * ch;
  const double q = std::pow(qbase, e) - p;
  if (!(q > 0.0))
    throw std::domain_error("rotational slope: q <= 0 (outside the profile)");
  const double qdot = e * std::pow(qbase, e - 1.0) * qdot_base - pdot;
  const double slope = std::sqrt(p / q);
  return (pdot * q - p * qdot) / (2.0 * slope * q * q);
}

}  // namespace

PQ pq(const RotationalSpec& spec, double xi) {
  validate_spec(spec);
  if (xi < 0.0) throw std::domain_error("pq: need xi >= 0");
  return pq_from_integral(spec, xi, integral_I(spec.n, spec.r, xi));
}

double rho0(const RotationalSpec& spec) {
  validate_spec(spec);
  require_reduced(spec, "rho0");
  if (classify(spec) == Classification::EntireGraph)
    throw std::logic_error("rho0: spec classifies as an entire graph; q never vanishes");

  IntegralCache cache(spec.n, spec.r);
  const auto g = [&](double xi) { return g_of(spec, xi, cache); };

  // left bracket: the maximizer of g for n > r, a plain small value for n = r
  double lo;
  if (spec.n > spec.r) {
    const double arg = std::pow(threshold(spec.n, spec.r) / spec.hr, 1.0 / spec.r);
    lo = std::atanh(arg);
  } else {
    lo = 1e-3;
    while (g(lo) <= 0.0 && lo > 1e-12) lo *= 0.25;
  }
  if (!(g(lo) > 0.0)) throw NumericError("rho0: failed to find a positive left bracket");

  const double limit = std::min(600.0, overflow_cap(spec.n, spec.r));
  const double hi = expand_upper(g, lo, std::max(2.0 * lo, 1.0), limit);
  // tighter than the documented 1e-12 so quadrature clamped to the returned
  // value never lands where q has already gone negative
  return bisect(g, lo, hi, 1e-14);
}

double dlambda_at(const RotationalSpec& spec, double rho) {
  validate_spec(spec);
  require_reduced(spec, "dlambda_at");
  if (rho < 0.0) throw std::domain_error("dlambda_at: need rho >= 0");
  IntegralCache cache(spec.n, spec.r);
  return slope_at(spec, rho, cache);
}

double ddlambda_at(const RotationalSpec& spec, double rho) {
  validate_spec(spec);
  require_reduced(spec, "ddlambda_at");
  if (rho < 0.0) throw std::domain_error("ddlambda_at: need rho >= 0");
  IntegralCache cache(spec.n, spec.r);
  return curvature_slope_rate(spec, rho, cache);
}

namespace {

// slope integrand in the substituted variable s with xi = rho_end - s^2;
// bounded even when q(rho_end) = 0.  The floor on s keeps xi far enough from
// rho_end that rounding in q cannot flip its sign; below it the integrand is
// frozen at its (finite) floor value, off by O(floor^2) in the integral --
// far below quadrature tolerance.
template <class Cache>
auto substituted_slope(const RotationalSpec& spec, double rho_end, Cache& cache) {
  const double floor = 3e-6 * std::sqrt(rho_end);
  return [&spec, rho_end, floor, &cache](double s) {
    const double se = std::max(s, floor);
    const double xi = std::max(0.0, rho_end - se * se);
    return 2.0 * se * slope_at(spec, xi, cache);
  };
}

double slope_cell_substituted(const RotationalSpec& spec, double rho_end, double a, double b,
                              IntegralCache& cache, const QuadratureOptions& opt) {
  double sa = std::sqrt(rho_end - b);  // note: reversed orientation
  const double sb = std::sqrt(rho_end - a);
  const auto w = substituted_slope(spec, rho_end, cache);
  // Below the split the integrand is smooth but its evaluation noise (the q
  // cancellation) outruns any adaptive tolerance; a fixed composite rule
  // integrates through the noise instead of chasing it.
  const double split = std::min(sb, 0.03 * std::sqrt(rho_end));
  double total = 0.0;
  if (sa < split) {
    total += integrate_gk15_fixed(w, sa, split, 8);
    sa = split;
  }
  if (sa < sb) total += integrate_gk15(w, sa, sb, opt);
  return total;
}

}  // namespace

double lambda_at(const RotationalSpec& spec, double rho) {
  validate_spec(spec);
  require_reduced(spec, "lambda_at");
  if (rho < 0.0) throw std::domain_error("lambda_at: need rho >= 0");
  if (rho == 0.0) return 0.0;
  IntegralCache cache(spec.n, spec.r);
  if (classify(spec) == Classification::CompactSphere) {
    const double end = rho0(spec);
    if (rho > end * (1.0 + 1e-12) + 1e-12)
      throw std::domain_error("lambda_at: rho beyond the closing radius");
    const double clamped = std::min(rho, end);
    return slope_cell_substituted(spec, end, 0.0, clamped, cache, {1e-12, 1e-13, 4096});
  }
  return integrate_gk15([&](double xi) { return slope_at(spec, xi, cache); }, 0.0, rho,
                        {1e-12, 1e-13, 4096});
}

double lambda_tanh_sinh(const RotationalSpec& spec, double rho) {
  validate_spec(spec);
  require_reduced(spec, "lambda_tanh_sinh");
  if (rho < 0.0) throw std::domain_error("lambda_tanh_sinh: need rho >= 0");
  if (rho == 0.0) return 0.0;
  IntegralCache cache(spec.n, spec.r);
  if (classify(spec) == Classification::CompactSphere) {
    const double end = rho0(spec);
    if (rho > end * (1.0 + 1e-12) + 1e-12)
      throw std::domain_error("lambda_tanh_sinh: rho beyond the closing radius");
    const double clamped = std::min(rho, end);
    return integrate_tanh_sinh(substituted_slope(spec, end, cache), std::sqrt(end - clamped),
                               std::sqrt(end), 1e-11);
  }
  return integrate_tanh_sinh([&](double xi) { return slope_at(spec, xi, cache); }, 0.0, rho,
                             1e-11);
}

ProfileCurve profile(const RotationalSpec& spec, int samples, double rho_max) {
  validate_spec(spec);
  require_reduced(spec, "profile");
  if (samples < 2) throw std::invalid_argument("profile: need samples >= 2");

  ProfileCurve curve;
  curve.param_name = "rho";
  curve.n = spec.n;
  curve.r = spec.r;
  curve.target = spec.hr;
  curve.target_is_hr = true;

  IntegralCache cache(spec.n, spec.r);
  const QuadratureOptions cell_opt{1e-12, 1e-12, 4096};
  const Classification kind = classify(spec);

  if (kind == Classification::EntireGraph) {
    if (!(rho_max > 0.0)) throw std::invalid_argument("profile: need rho_max > 0");
    curve.family = ProfileFamily::RotationalEntire;
    curve.domain_a = 0.0;
    curve.domain_b = std::numeric_limits<double>::infinity();
    curve.truncated = true;

    double lam = 0.0, comp = 0.0;
    curve.rows.push_back({0.0, 0.0, 0.0, std::pow(spec.hr, 1.0 / spec.r)});
    for (int k = 1; k <= samples; ++k) {
      const double a = rho_max * (k - 1) / samples;
      const double b = rho_max * k / samples;
      const double y = integrate_gk15([&](double xi) { return slope_at(spec, xi, cache); }, a,
                                      b, cell_opt) -
                       comp;
      const double t = lam + y;
      comp = (t - lam) - y;
      lam = t;
      curve.rows.push_back(
          {b, lam, slope_at(spec, b, cache), curvature_slope_rate(spec, b, cache)});
    }
    return curve;
  }

  const double end = rho0(spec);
  curve.family = ProfileFamily::RotationalCompact;
  curve.domain_a = 0.0;
  curve.domain_b = end;
  curve.endpoint_singular = true;

  double lam = 0.0, comp = 0.0;
  curve.rows.push_back({0.0, 0.0, 0.0, std::pow(spec.hr, 1.0 / spec.r)});
  for (int k = 1; k <= samples; ++k) {
    const double a = end * (k - 1) / samples;
    const double b = end * k / samples;
    const double y = slope_cell_substituted(spec, end, a, b, cache, cell_opt) - comp;
    const double t = lam + y;
    comp = (t - lam) - y;
    lam = t;
    if (k < samples) {
      curve.rows.push_back(
          {b, lam, slope_at(spec, b, cache), curvature_slope_rate(spec, b, cache)});
    } else {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      curve.rows.push_back({end, lam, nan, nan});
    }
  }
  return curve;
}

symfunc::PrincipalCurvatures principal_curvatures(const RotationalSpec& spec, double rho,
                                                  double dlambda, double ddlambda) {
  validate_spec(spec);
  if (!(rho > 0.0)) throw std::domain_error("principal_curvatures: need rho > 0");
  const double w = std::sqrt(1.0 + dlambda * dlambda);
  const double horiz = (std::cosh(rho) / std::sinh(rho)) * dlambda / w;
  symfunc::PrincipalCurvatures k;
  k.values.assign(static_cast<std::size_t>(spec.n) - 1, horiz);
  k.values.push_back(ddlambda / (w * w * w));
  k.orientation = symfunc::NormalOrientation::Upward;
  return k;
}

CurvatureReport verify_constant_hr(const ProfileCurve& curve, const RotationalSpec& spec) {
  if (curve.family != ProfileFamily::RotationalEntire &&
      curve.family != ProfileFamily::RotationalCompact)
    throw std::invalid_argument("verify_constant_hr: not a rotational profile");
  if (!curve.target_is_hr)
    throw std::invalid_argument("verify_constant_hr: profile target is not H_r");
  curve.validate();
  validate_spec(spec);
  require_reduced(spec, "verify_constant_hr");
  if (curve.n != spec.n || curve.r != spec.r ||
      std::abs(curve.target - spec.hr) > 1e-12 * std::max(1.0, std::abs(spec.hr)))
    throw std::invalid_argument("verify_constant_hr: curve metadata disagrees with spec");

  IntegralCache cache(spec.n, spec.r);
  const bool compact = curve.family == ProfileFamily::RotationalCompact;
  const double end = curve.domain_b;

  std::vector<CurvaturePoint> pts;
  double worst_flux = 0.0;
  for (const ProfileRow& row : curve.rows) {
    if (!(row.param > 0.0)) continue;
    if (!std::isfinite(row.dlambda) || !std::isfinite(row.ddlambda)) continue;

    const symfunc::PrincipalCurvatures k =
        principal_curvatures(spec, row.param, row.dlambda, row.ddlambda);
    CurvaturePoint pt;
    pt.location = row.param;
    pt.s_r = symfunc::elementary_symmetric(k.values, curve.r);
    pt.h_r = pt.s_r / binomial(curve.n, curve.r);
    pt.residual = pt.h_r - curve.target;
    pts.push_back(pt);

    // flux-form re-derivation by centered differences of the bracket
    double h = 1e-5 * std::max(1.0, row.param);
    h = std::min(h, 0.45 * row.param);
    if (compact) h = std::min(h, 0.45 * (end - row.param));
    if (!(h > 0.0)) continue;
    const auto bracket = [&](double x) {
      const double ld = slope_at(spec, x, cache);
      const double frac = ld * ld / (1.0 + ld * ld);
      return std::pow(std::sinh(x), curve.n - curve.r) * std::pow(frac, 0.5 * curve.r);
    };
    const double lhs = (bracket(row.param + h) - bracket(row.param - h)) / (2.0 * h);
    const double rhs =
        spec.n * spec.hr * profile_integrand(spec.n, spec.r, row.param);
    const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    worst_flux = std::max(worst_flux, rel);
  }
  if (pts.empty())
    throw std::invalid_argument("verify_constant_hr: no usable interior rows");
  if (worst_flux > 1e-6)
    throw NumericError("verify_constant_hr: flux-form residual exceeded 1e-6");
  return CurvatureReport::from_points(std::move(pts));
}

ClosedProfile glue_closed_profile(const ProfileCurve& curve, const RotationalSpec& spec) {
  if (classify(spec) != Classification::CompactSphere)
    throw std::logic_error("glue_closed_profile: spec classifies as an entire graph");
  if (curve.family != ProfileFamily::RotationalCompact)
    throw std::invalid_argument("glue_closed_profile: only compact profiles close up");
  curve.validate();
  if (curve.n != spec.n || curve.r != spec.r ||
      std::abs(curve.target - spec.hr) > 1e-12 * std::max(1.0, std::abs(spec.hr)))
    throw std::invalid_argument("glue_closed_profile: curve metadata disagrees with spec");
  if (!(std::abs(curve.rows.back().param - curve.domain_b) <=
        1e-9 * std::max(1.0, curve.domain_b)))
    throw std::invalid_argument("glue_closed_profile: curve does not reach the closing radius");
  ClosedProfile closed;
  closed.upper = curve;
  closed.t0 = curve.rows.back().lambda;
  return closed;
}

void write_closed_path_csv(const ClosedProfile& closed, std::ostream& out) {
  const ProfileCurve& c = closed.upper;
  out << "# hrsurf closed-path\n";
  out << "# schema: 1\n";
  out << "# n: " << c.n << "\n";
  out << "# r: " << c.r << "\n";
  out << "# target: " << (c.target_is_hr ? "H_r " : "S_r ") << format_double(c.target) << "\n";
  out << "# t0: " << format_double(closed.t0) << "\n";
  out << "rho,t\n";
  for (const ProfileRow& row : c.rows)
    out << format_double(row.param) << ',' << format_double(row.lambda) << '\n';
  for (std::size_t i = c.rows.size() - 1; i-- > 0;)
    out << format_double(c.rows[i].param) << ','
        << format_double(2.0 * closed.t0 - c.rows[i].lambda) << '\n';
}

LimitChecks limit_checks_detail(int n, int r) {
  validate_nr(n, r);
  if (n <= r) throw std::invalid_argument("limit_checks: need n > r");
  const double thr = threshold(n, r);

  LimitChecks out;
  out.h_grid = {0.9 * thr, 0.6 * thr, 0.3 * thr, 0.1 * thr, 0.03 * thr};
  out.lambda_monotone_in_h = true;
  for (double h : out.h_grid) {
    RotationalSpec spec{n, r, h, 0.0};
    Vec row;
    for (double rho : out.probe_rhos) row.push_back(lambda_at(spec, rho));
    out.lambda_table.push_back(row);
  }
  for (std::size_t i = 0; i + 1 < out.lambda_table.size(); ++i)
    for (std::size_t j = 0; j < out.probe_rhos.size(); ++j)
      if (!(out.lambda_table[i][j] - out.lambda_table[i + 1][j] > -1e-12))
        out.lambda_monotone_in_h = false;

  out.rho0_increasing = true;
  for (int j = 1; j <= 4; ++j) {
    const double h = thr * (1.0 + std::pow(10.0, -j));
    out.rho0_h.push_back(h);
    out.rho0_values.push_back(rho0(RotationalSpec{n, r, h, 0.0}));
  }
  for (std::size_t i = 0; i + 1 < out.rho0_values.size(); ++i)
    if (!(out.rho0_values[i + 1] - out.rho0_values[i] > 1e-12)) out.rho0_increasing = false;

  out.sup_decreasing = true;
  for (int j = 1; j <= 4; ++j) {
    const double h = thr * std::pow(10.0, -j);
    out.small_h.push_back(h);
    // the profile increases in rho, so the sup over [0,5] sits at rho = 5
    out.sup_lambda.push_back(lambda_at(RotationalSpec{n, r, h, 0.0}, 5.0));
  }
  for (std::size_t i = 0; i + 1 < out.sup_lambda.size(); ++i)
    if (!(out.sup_lambda[i] - out.sup_lambda[i + 1] > 1e-12)) out.sup_decreasing = false;

  return out;
}

CurvatureReport limit_checks(int n, int r) {
  const LimitChecks d = limit_checks_detail(n, r);
  std::vector<CurvaturePoint> pts;
  int step = 0;
  for (std::size_t i = 0; i + 1 < d.lambda_table.size(); ++i)
    for (std::size_t j = 0; j < d.probe_rhos.size(); ++j)
      pts.push_back({100.0 + ++step, d.lambda_table[i][j], d.lambda_table[i + 1][j],
                     d.lambda_table[i][j] - d.lambda_table[i + 1][j]});
  step = 0;
  for (std::size_t i = 0; i + 1 < d.rho0_values.size(); ++i)
    pts.push_back({200.0 + ++step, d.rho0_values[i], d.rho0_values[i + 1],
                   d.rho0_values[i + 1] - d.rho0_values[i]});
  step = 0;
  for (std::size_t i = 0; i + 1 < d.sup_lambda.size(); ++i)
    pts.push_back({300.0 + ++step, d.sup_lambda[i], d.sup_lambda[i + 1],
                   d.sup_lambda[i] - d.sup_lambda[i + 1]});
  return CurvatureReport::from_points(std::move(pts));
}

}  // namespace hrsurf::rotational
