#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "core/barriers.hpp"
#include "core/parabolic.hpp"
#include "core/quadrature.hpp"
#include "core/rotational.hpp"
#include "core/verify.hpp"

using namespace hrsurf;
using namespace hrsurf::barriers;

namespace {

// slope of the critical (3,2) graph straight from closed antiderivatives:
// I = sinh - gd, p = I, q = gd with gd(x) = asin(tanh x)
double critical_slope_32(double x) {
  if (x == 0.0) return 0.0;
  const double gd = std::asin(std::tanh(x));
  return std::sqrt((std::sinh(x) - gd) / gd);
}

// same for (4,3): I = cosh + sech - 2, p = I^{2/3}, q = sinh^{2/3} - p.
// I is written as 4 sinh^4(x/2) / cosh(x) -- the same value, but free of the
// cancellation that makes the naive sum useless below x ~ 1e-4.
double critical_slope_43(double x) {
  if (x == 0.0) return 0.0;
  const double sh = std::sinh(0.5 * x);
  const double i = 4.0 * sh * sh * sh * sh / std::cosh(x);
  const double p = std::pow(i, 2.0 / 3.0);
  const double q = std::pow(std::sinh(x), 2.0 / 3.0) - p;
  return std::sqrt(p / q);
}

}  // namespace

TEST_CASE("barrier query validation") {
  CHECK_THROWS_AS(validate_query({2, 2, 1.0}), std::invalid_argument);  // r = n
  CHECK_THROWS_AS(validate_query({3, 2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query({3, 2, -2.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_query({3, 0, 1.0}), std::invalid_argument);
  validate_query({3, 2, 1.0});  // fine
}

TEST_CASE("bounds against closed-form quadrature, (3,2)") {
  for (double R : {0.5, 1.0, 2.0, 4.0}) {
    const double height = height_bound({3, 2, R});
    const double want = integrate_gk15_fixed(critical_slope_32, 0.0, R, 512);
    CHECK(std::abs(height - want) < 1e-8);
    CHECK(std::abs(gradient_bound({3, 2, R}) - critical_slope_32(R)) < 1e-8);
  }
}

TEST_CASE("bounds against closed-form quadrature, (4,3)") {
  for (double R : {0.5, 1.0, 2.0, 4.0}) {
    const double height = height_bound({4, 3, R});
    const double want = integrate_gk15_fixed(critical_slope_43, 0.0, R, 512);
    CHECK(std::abs(height - want) < 1e-8);
    CHECK(std::abs(gradient_bound({4, 3, R}) - critical_slope_43(R)) < 1e-8);
  }
}

TEST_CASE("bounds grow with the ball radius") {
  double prev_h = 0.0, prev_g = 0.0;
  for (double R : {0.5, 1.0, 2.0, 4.0}) {
    const double h = height_bound({5, 2, R});
    const double g = gradient_bound({5, 2, R});
    CHECK(h > prev_h);
    CHECK(g > prev_g);
    prev_h = h;
    prev_g = g;
  }
}

TEST_CASE("bounds coincide with the critical profile") {
  const rotational::RotationalSpec crit{3, 2, rotational::threshold(3, 2), 0.0};
  CHECK(height_bound({3, 2, 1.5}) ==
        doctest::Approx(rotational::lambda_at(crit, 1.5)).epsilon(1e-12));
  CHECK(gradient_bound({3, 2, 1.5}) ==
        doctest::Approx(rotational::dlambda_at(crit, 1.5)).epsilon(1e-12));
}

TEST_CASE("verify_profile dispatches on the family") {
  const rotational::RotationalSpec rs{3, 2, 0.3, 0.0};
  const ProfileCurve rot = rotational::profile(rs, 32, 4.0);
  const CurvatureReport a = verify::verify_profile(rot);
  const CurvatureReport b = rotational::verify_constant_hr(rot, rs);
  CHECK(a.max_abs_residual == doctest::Approx(b.max_abs_residual));
  CHECK(a.max_abs_residual < 1e-8);

  const CurvatureReport pm = verify::verify_profile(parabolic::minimal_profile(4, 2, 1.0, 40));
  CHECK(pm.max_abs_residual < 1e-10);

  const CurvatureReport sf = verify::verify_profile(parabolic::flat_screw_profile(1.2, 0.8, 40));
  CHECK(sf.max_abs_residual < 1e-10);

  parabolic::ScrewOdeParams params;
  params.n = 3;
  params.s2 = 0.4;
  params.l = 0.2;
  params.d = 0.9;
  params.y0 = 0.6;
  params.y1 = 1.4;
  params.steps = 128;
  const CurvatureReport so = verify::verify_profile(parabolic::screw_ode_solve(params));
  CHECK(so.max_abs_residual < 1e-7);
}
