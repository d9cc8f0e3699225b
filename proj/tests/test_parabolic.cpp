#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/graph_curvature.hpp"
#include "core/parabolic.hpp"
#include "core/profile_curve.hpp"

using namespace hrsurf;
using namespace hrsurf::parabolic;

namespace {

// centered difference helper for derivative cross-checks
template <class F>
double central(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double sr_of_translational(int n, int r, double y, const Vec& l, double lam, double dlam,
                           double ddlam) {
  return graphcurv::screw_sr_minor(n, r, y, l, lam, dlam, ddlam);
}

}  // namespace

TEST_CASE("logarithmic minimal family, n = r") {
  CHECK(minimal_lambda(2, 2, 1.0, std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(minimal_dlambda(2, 2, 0.7, 2.0) == doctest::Approx(0.35).epsilon(1e-14));
  CHECK(minimal_ddlambda(3, 3, 0.7, 2.0) == doctest::Approx(-0.175).epsilon(1e-14));
  CHECK_THROWS_AS((void)minimal_lambda(2, 2, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)minimal_lambda(2, 2, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("arcsin minimal family, n > r") {
  // n=3, r=2, c=1: lambda = 2 asin(sqrt(y)); lambda(1/4) = pi/3
  CHECK(minimal_lambda(3, 2, 1.0, 0.25) ==
        doctest::Approx(std::acos(-1.0) / 3.0).epsilon(1e-14));
  // the domain stops at c^{r/(n-r)}
  CHECK_THROWS_AS((void)minimal_lambda(3, 2, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)minimal_lambda(4, 3, 1.2, 2.0), std::domain_error);

  // derivative columns agree with finite differences of the value column
  for (double y : {0.2, 0.5, 0.8}) {
    const auto lam = [](double t) { return minimal_lambda(3, 2, 1.0, t); };
    const auto dlam = [](double t) { return minimal_dlambda(3, 2, 1.0, t); };
    CHECK(minimal_dlambda(3, 2, 1.0, y) == doctest::Approx(central(lam, y, 1e-6)).epsilon(1e-7));
    CHECK(minimal_ddlambda(3, 2, 1.0, y) == doctest::Approx(central(dlam, y, 1e-6)).epsilon(1e-7));
  }

  // slope blows up at the right end
  CHECK(minimal_dlambda(3, 2, 1.0, 1.0 - 1e-8) > 1e3);
}

TEST_CASE("minimal profiles carry coherent metadata") {
  const ProfileCurve log_curve = minimal_profile(3, 3, 0.8, 50);
  CHECK(log_curve.family == ProfileFamily::ParabolicMinimal);
  CHECK(log_curve.n == 3);
  CHECK(log_curve.r == 3);
  CHECK(log_curve.target == 0.0);
  CHECK_FALSE(log_curve.target_is_hr);
  CHECK(log_curve.c == 0.8);
  CHECK(log_curve.truncated);
  CHECK_FALSE(log_curve.endpoint_singular);
  log_curve.validate();

  const ProfileCurve arc = minimal_profile(4, 3, 1.1, 50);
  CHECK(arc.endpoint_singular);
  CHECK_FALSE(arc.truncated);
  CHECK(arc.domain_b == doctest::Approx(std::pow(1.1, 3.0)).epsilon(1e-14));
  arc.validate();
  // rows stay strictly interior and match the closed forms
  for (const ProfileRow& row : arc.rows) {
    CHECK(row.param > 0.0);
    CHECK(row.param < arc.domain_b);
    CHECK(row.lambda == doctest::Approx(minimal_lambda(4, 3, 1.1, row.param)).epsilon(1e-14));
    CHECK(row.dlambda == doctest::Approx(minimal_dlambda(4, 3, 1.1, row.param)).epsilon(1e-14));
  }

  CHECK_THROWS_AS((void)minimal_profile(3, 2, 1.0, 1), std::invalid_argument);
}

TEST_CASE("minimal families really have vanishing S_r") {
  const Vec l2(1, 0.0), l3(2, 0.0), l4(3, 0.0), l5(4, 0.0);
  for (int i = 1; i <= 20; ++i) {
    const double t = i / 21.0;
    // n = r families on a log-range grid
    const double ylog = 0.3 + 2.7 * t;
    CHECK(std::abs(sr_of_translational(2, 2, ylog, l2, minimal_lambda(2, 2, 0.7, ylog),
                                       minimal_dlambda(2, 2, 0.7, ylog),
                                       minimal_ddlambda(2, 2, 0.7, ylog))) < 1e-8);
    CHECK(std::abs(sr_of_translational(3, 3, ylog, l3, minimal_lambda(3, 3, 0.9, ylog),
                                       minimal_dlambda(3, 3, 0.9, ylog),
                                       minimal_ddlambda(3, 3, 0.9, ylog))) < 1e-8);
    // n > r families strictly inside their arcsin branch
    const double end52 = std::pow(1.0, 2.0 / 3.0);
    const double y52 = end52 * (0.05 + 0.9 * t);
    CHECK(std::abs(sr_of_translational(5, 2, y52, l5, minimal_lambda(5, 2, 1.0, y52),
                                       minimal_dlambda(5, 2, 1.0, y52),
                                       minimal_ddlambda(5, 2, 1.0, y52))) < 1e-8);
    const double end43 = std::pow(1.1, 3.0);
    const double y43 = end43 * (0.05 + 0.9 * t);
    CHECK(std::abs(sr_of_translational(4, 3, y43, l4, minimal_lambda(4, 3, 1.1, y43),
                                       minimal_dlambda(4, 3, 1.1, y43),
                                       minimal_ddlambda(4, 3, 1.1, y43))) < 1e-8);
  }
}

TEST_CASE("flat screw family") {
  const double c = 1.2, l = 0.8;
  const double end = std::sqrt(c) / l;
  for (double y : {0.2 * end, 0.5 * end, 0.9 * end}) {
    CHECK(flat_screw_dlambda(c, l, y) ==
          doctest::Approx(std::sqrt(c - l * l * y * y) / y).epsilon(1e-14));
    const auto lam = [&](double t) { return flat_screw_lambda(c, l, t); };
    CHECK(flat_screw_dlambda(c, l, y) == doctest::Approx(central(lam, y, 1e-7)).epsilon(1e-6));
    // S_2 = 0 through the graph-jet route
    CHECK(std::abs(sr_of_translational(2, 2, y, {l}, flat_screw_lambda(c, l, y),
                                       flat_screw_dlambda(c, l, y),
                                       flat_screw_ddlambda(c, l, y))) < 1e-10);
  }
  CHECK_THROWS_AS((void)flat_screw_lambda(c, l, end * 1.01), std::domain_error);
  CHECK_THROWS_AS((void)flat_screw_lambda(-1.0, l, 0.5), std::invalid_argument);

  const ProfileCurve curve = flat_screw_profile(c, l, 64);
  CHECK(curve.family == ProfileFamily::ScrewFlat);
  CHECK(curve.n == 2);
  CHECK(curve.r == 2);
  CHECK(curve.l.size() == 1);
  CHECK(curve.l[0] == l);
  CHECK(curve.endpoint_singular);
  curve.validate();
}

TEST_CASE("entire logarithmic graph with prescribed H_2") {
  CHECK_THROWS_AS((void)entire_log_slope(2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)entire_log_slope(3, 0.34), std::domain_error);  // cap is 1/3
  CHECK_THROWS_AS((void)entire_log_slope(3, 0.0), std::domain_error);

  for (double k : {0.05, 0.15, 0.3}) {
    const double c = entire_log_slope(3, k);
    CHECK(c == doctest::Approx(std::sqrt(3.0 * k / (1.0 - 3.0 * k))).epsilon(1e-14));
    // two-route check: the graph really has |H_2| = k
    const Vec l(2, 0.0);
    for (double y : {0.5, 1.0, 2.5}) {
      const double s2 = sr_of_translational(3, 2, y, l, c * std::log(y), c / y, -c / (y * y));
      CHECK(std::abs(s2) / 3.0 == doctest::Approx(k).epsilon(1e-10));
    }
  }
}

TEST_CASE("screw ODE reproduces the conserved closed form") {
  ScrewOdeParams params;
  params.n = 3;
  params.s2 = 0.0;
  params.l = 0.0;
  params.d = 0.5;
  params.y0 = 0.5;
  params.y1 = 3.0;
  params.steps = 256;
  const ProfileCurve curve = screw_ode_solve(params);
  CHECK(curve.family == ProfileFamily::ScrewOde);
  CHECK(curve.n == 3);
  CHECK_FALSE(curve.target_is_hr);
  CHECK(curve.target == 0.0);
  CHECK(static_cast<int>(curve.rows.size()) == params.steps + 1);
  curve.validate();

  for (const ProfileRow& row : curve.rows) {
    const double y = row.param;
    // slope of the conserved flow: sqrt(d) y^{(n-4)/2} / sqrt((n-1) - d y^{n-2})
    const double want = std::sqrt(0.5) * std::pow(y, -0.5) / std::sqrt(2.0 - 0.5 * y);
    CHECK(std::abs(row.dlambda - want) <= 1e-8 * std::max(1.0, want));
    // psi stays conserved when the forcing vanishes
    const double w2 = 1.0 + y * y * row.dlambda * row.dlambda;
    const double psi = (2.0 * row.dlambda * row.dlambda / w2) * y;  // (z/W^2) y^{4-n}
    CHECK(psi == doctest::Approx(0.5).epsilon(1e-9));
    // same family as the arcsin profile with c^2 = (n-1)/d
    CHECK(row.dlambda ==
          doctest::Approx(minimal_dlambda(3, 2, 2.0, y)).epsilon(1e-8));
  }
}

TEST_CASE("screw ODE matches the flat closed form up to a shift") {
  ScrewOdeParams params;
  params.n = 2;
  params.s2 = 0.0;
  params.l = 1.0;
  params.d = 0.5;  // c = d/(1-d) = 1
  params.y0 = 0.2;
  params.y1 = 0.9;
  params.steps = 512;
  const ProfileCurve curve = screw_ode_solve(params);

  const double shift =
      curve.rows.front().lambda - flat_screw_lambda(1.0, 1.0, curve.rows.front().param);
  for (const ProfileRow& row : curve.rows) {
    CHECK(std::abs(row.lambda - shift - flat_screw_lambda(1.0, 1.0, row.param)) < 1e-6);
    CHECK(std::abs(row.dlambda - flat_screw_dlambda(1.0, 1.0, row.param)) < 1e-6);
  }
}

TEST_CASE("screw ODE domain protection") {
  ScrewOdeParams params;
  params.n = 3;
  params.s2 = 0.0;
  params.l = 0.0;
  params.d = 0.5;
  params.y0 = 0.5;
  params.y1 = 5.0;  // slope turns imaginary at y = (n-1)/d = 4
  CHECK_THROWS_AS((void)screw_ode_solve(params), DomainExhaustedError);
  try {
    (void)screw_ode_solve(params);
  } catch (const DomainExhaustedError& e) {
    CHECK(e.last_valid_param > 3.0);
    CHECK(e.last_valid_param < 4.1);
  }

  params.y1 = 3.0;
  params.psi0 = 0.5;  // explicit start equal to the conserved value: same flow
  const ProfileCurve a = screw_ode_solve(params);
  params.psi0.reset();
  const ProfileCurve b = screw_ode_solve(params);
  CHECK(a.rows.back().lambda == doctest::Approx(b.rows.back().lambda).epsilon(1e-12));

  params.y0 = -1.0;
  CHECK_THROWS_AS((void)screw_ode_solve(params), std::invalid_argument);
}
