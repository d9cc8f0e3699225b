#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "core/graph_curvature.hpp"
#include "core/graph_sample.hpp"
#include "core/smallmat.hpp"
#include "core/symfunc.hpp"

using namespace hrsurf;
using namespace hrsurf::graphcurv;

namespace {

GraphJet log_graph_jet(double c, double y) {
  // u = c ln y on the half-space model, n = 2 (coordinates x, y)
  return screw_jet({0.0}, c * std::log(y), c / y, -c / (y * y));
}

GraphJet random_jet(std::mt19937& gen, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vec grad(n);
  for (double& g : grad) g = dist(gen);
  Matrix hess(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      hess(i, j) = dist(gen);
      hess(j, i) = hess(i, j);
    }
  return GraphJet::make(dist(gen), std::move(grad), std::move(hess));
}

}  // namespace

TEST_CASE("jet construction") {
  Matrix h(2, 2);
  h(0, 1) = 1.0;  // blatantly asymmetric
  CHECK_THROWS_AS((void)GraphJet::make(0.0, {0.0, 0.0}, h), std::invalid_argument);
  CHECK_THROWS_AS((void)GraphJet::make(0.0, {0.0, 0.0}, Matrix(3, 3)), std::invalid_argument);

  const GraphJet jet = GraphJet::make(1.0, {3.0, 4.0}, Matrix(2, 2));
  CHECK(w_factor(jet, 0.2) == doctest::Approx(std::sqrt(1.0 + 0.04 * 25.0)));
}

TEST_CASE("fundamental forms of the logarithmic graph") {
  const double c = 0.8, y = 1.7;
  const GraphJet jet = log_graph_jet(c, y);
  const double w = std::sqrt(1.0 + c * c);
  const FundamentalForms forms = fundamental_forms(jet, y, {0.0, 1.0});

  CHECK(forms.W == doctest::Approx(w).epsilon(1e-14));
  CHECK(forms.first(0, 0) == doctest::Approx(1.0 / (y * y)).epsilon(1e-14));
  CHECK(forms.first(1, 1) == doctest::Approx((1.0 + c * c) / (y * y)).epsilon(1e-14));
  CHECK(forms.first(0, 1) == doctest::Approx(0.0));
  CHECK(forms.second(0, 0) == doctest::Approx(-c / (y * y * w)).epsilon(1e-13));
  CHECK(forms.second(1, 1) == doctest::Approx(0.0).epsilon(1e-15));
  // the stored inverse really inverts I
  const Matrix prod = forms.first_inv * forms.first;
  CHECK(max_abs(prod - Matrix::identity(2)) < 1e-12);
}

TEST_CASE("shape operator of the logarithmic graph") {
  const double c = 1.3, y = 0.6;
  const ShapeOperator a = shape_operator(log_graph_jet(c, y), y, {0.0, 1.0});
  const double w = std::sqrt(1.0 + c * c);
  // eigenvalues {-c/W, 0}: flat in the translation direction
  CHECK(a.curvatures[0] == doctest::Approx(-c / w).epsilon(1e-12));
  CHECK(a.curvatures[1] == doctest::Approx(0.0).epsilon(1e-13));
  // coordinate and symmetrized routes share their spectrum
  const SymEigen eig = sym_eigen(a.symmetric);
  CHECK(eig.values[0] == doctest::Approx(a.curvatures[0]).epsilon(1e-12));

  // S_2 = 0 and |H_1| = c / (2 sqrt(1+c^2)), independent of y
  for (double yy : {0.5, 1.0, 2.0}) {
    const ShapeOperator ay = shape_operator(log_graph_jet(c, yy), yy, {0.0, 1.0});
    CHECK(symfunc::elementary_symmetric(ay.curvatures, 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(symfunc::normalized_hr(ay.curvatures, 1)) ==
          doctest::Approx(c / (2.0 * w)).epsilon(1e-12));
  }
}

TEST_CASE("minor expansion matches the spectral route") {
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> fdist(0.2, 3.0);
  std::uniform_real_distribution<double> gdist(-1.0, 1.0);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 12; ++rep) {
      const GraphJet jet = random_jet(gen, n);
      const double F = fdist(gen);
      Vec grad_f(n);
      for (double& g : grad_f) g = gdist(gen);
      for (int r = 1; r <= n; ++r) {
        const double spec = sr_from_spectrum(jet, F, grad_f, r);
        const double minor = sr_from_minors(jet, F, grad_f, r);
        CHECK(std::abs(minor - spec) <= 1e-8 * std::max(1.0, std::abs(spec)));
      }
    }
  }
}

TEST_CASE("top degree equals the determinant of the shape operator") {
  std::mt19937 gen(5);
  for (int n = 2; n <= 4; ++n) {
    const GraphJet jet = random_jet(gen, n);
    const double F = 0.9;
    Vec grad_f(n, 0.0);
    grad_f[n - 1] = 1.0;
    const ShapeOperator a = shape_operator(jet, F, grad_f);
    CHECK(sr_from_spectrum(jet, F, grad_f, n) ==
          doctest::Approx(determinant(a.coordinate)).epsilon(1e-10));
  }
}

TEST_CASE("screw jet layout and helper") {
  const Vec l{0.3, -0.2};
  const GraphJet jet = screw_jet(l, 1.5, 0.4, -0.1);
  REQUIRE(jet.dim() == 3);
  CHECK(jet.grad[0] == 0.3);
  CHECK(jet.grad[1] == -0.2);
  CHECK(jet.grad[2] == 0.4);
  CHECK(jet.hess(2, 2) == -0.1);
  CHECK(jet.hess(0, 0) == 0.0);

  // helper agrees with assembling the jet by hand
  const double y = 1.2;
  Vec grad_f(3, 0.0);
  grad_f[2] = 1.0;
  CHECK(screw_sr_minor(3, 2, y, l, 1.5, 0.4, -0.1) ==
        doctest::Approx(sr_from_minors(jet, y, grad_f, 2)).epsilon(1e-14));
  CHECK_THROWS_AS((void)screw_sr_minor(3, 2, 0.0, l, 1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("conformal Ricci tensor") {
  const ambient::AmbientSpec half{3, ambient::Model::HalfSpace};
  const Vec ph{0.2, -0.4, 0.8};
  const Matrix rh = ricci_conformal(half, ph);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = (i == j) ? -2.0 / (0.8 * 0.8) : 0.0;
      CHECK(rh(i, j) == doctest::Approx(want).epsilon(1e-12));
    }

  const ambient::AmbientSpec ball{4, ambient::Model::Ball};
  const Vec pb{0.1, 0.2, -0.3, 0.25};
  const double F = (1.0 - norm2(pb)) / 2.0;
  const Matrix rb = ricci_conformal(ball, pb);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double want = (i == j) ? -3.0 / (F * F) : 0.0;
      CHECK(rb(i, j) == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("divergence identity residual converges at second order") {
  const ambient::AmbientSpec spec{2, ambient::Model::HalfSpace};
  const auto u = [](const Vec& p) { return 0.3 * std::sin(p[0]) + 0.2 * p[1] * p[1]; };
  Vec rms;
  for (int k = 0; k < 3; ++k) {
    const int m = 9 * (1 << k);
    const double h = 0.8 / m;
    const GraphSample s =
        GraphSample::from_function(spec, {0.1, 0.5}, {h, h}, {m + 1, m + 1}, u);
    const DivergenceReport rep = divergence_residual(s, 1);
    rms.push_back(rep.report.rms_residual);
    CHECK(rep.ricci_crosscheck < 1e-10);
  }
  const Vec slopes = convergence_slopes(rms);
  REQUIRE(slopes.size() == 2);
  for (double s : slopes) {
    CHECK(s > 1.85);
    CHECK(s < 2.15);
  }
}

TEST_CASE("divergence residual input validation") {
  const ambient::AmbientSpec spec{2, ambient::Model::HalfSpace};
  const auto u = [](const Vec&) { return 0.0; };
  const GraphSample tiny =
      GraphSample::from_function(spec, {0.1, 0.5}, {0.1, 0.1}, {4, 4}, u);
  CHECK_THROWS_AS((void)divergence_residual(tiny, 1), std::length_error);

  const GraphSample ok = GraphSample::from_function(spec, {0.1, 0.5}, {0.1, 0.1}, {6, 6}, u);
  CHECK_THROWS_AS((void)divergence_residual(ok, 0), std::out_of_range);
  CHECK_THROWS_AS((void)divergence_residual(ok, 2), std::out_of_range);
}

TEST_CASE("convergence slope helper") {
  const Vec slopes = convergence_slopes({4.0, 1.0, 0.25});
  REQUIRE(slopes.size() == 2);
  CHECK(slopes[0] == doctest::Approx(2.0));
  CHECK(slopes[1] == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)convergence_slopes({1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)convergence_slopes({1.0, -1.0}), std::invalid_argument);
}
