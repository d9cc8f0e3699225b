#pragma once

// One-dimensional quadrature: adaptive Gauss-Kronrod 7/15 as the workhorse,
// plus a tanh-sinh (double exponential) rule used as an independent
// cross-check and for integrable endpoint singularities.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "core/errors.hpp"

namespace hrsurf {

namespace qk15 {
// Nodes on [0,1] of the 15-point Kronrod extension of 7-point Gauss, QUADPACK values.
inline constexpr double nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double weights_kronrod[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552591,
    0.16900472663926790, 0.19035057806478540, 0.20443294007529889, 0.20948214108472782};
// Gauss weights attach to nodes[1], nodes[3], nodes[5], nodes[7].
inline constexpr double weights_gauss[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894, 0.41795918367346938};
}  // namespace qk15

struct PanelResult {
  double value = 0.0;
  double error = 0.0;
};

// Single Gauss-Kronrod 7/15 panel on [a,b].
template <class F>
PanelResult gk15_panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = 0.0, gauss = 0.0, resabs = 0.0;
  const double fc = f(mid);
  kronrod = qk15::weights_kronrod[7] * fc;
  gauss = qk15::weights_gauss[3] * fc;
  resabs = qk15::weights_kronrod[7] * std::abs(fc);

  for (int i = 0; i < 7; ++i) {
    const double dx = half * qk15::nodes[i];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    kronrod += qk15::weights_kronrod[i] * (f1 + f2);
    resabs += qk15::weights_kronrod[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += qk15::weights_gauss[i / 2] * (f1 + f2);
  }

  PanelResult r;
  r.value = kronrod * half;
  const double diff = std::abs(kronrod - gauss) * std::abs(half);
  // QUADPACK-style sharpening: the Kronrod error decays much faster than the
  // Gauss/Kronrod gap itself.
  double err = diff;
  if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
  err = std::max(err, std::abs(r.value) * 5e-17);
  r.error = err;
  return r;
}

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-14;
  int max_panels = 4096;
};

// Non-adaptive composite rule over equal panels.  For integrands that are
// smooth but carry evaluation noise (where adaptive refinement would chase
// the noise instead of converging).
template <class F>
double integrate_gk15_fixed(F&& f, double a, double b, int panels) {
  double total = 0.0, comp = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double pa = a + (b - a) * i / panels;
    const double pb = a + (b - a) * (i + 1) / panels;
    const double y = gk15_panel(f, pa, pb).value - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  return total;
}

// Adaptive bisection on a panel stack; deterministic evaluation order.
template <class F>
double integrate_gk15(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (a == b) return 0.0;
  struct Panel {
    double a, b;
  };
  const double span = std::abs(b - a);
  std::vector<Panel> stack{{a, b}};
  double total = 0.0, comp = 0.0;  // Kahan accumulator
  int used = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const PanelResult r = gk15_panel(f, p.a, p.b);
    const double width = std::abs(p.b - p.a);
    const double budget = opt.abs_tol * (width / span) + opt.rel_tol * std::abs(r.value);
    if (r.error <= budget || width <= std::abs(p.a + p.b) * 1e-15) {
      const double y = r.value - comp;
      const double t = total + y;
      comp = (t - total) - y;
      total = t;
      continue;
    }
    if (++used > opt.max_panels)
      throw NumericError("integrate_gk15: panel budget exhausted before tolerance was met");
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({mid, p.b});
    stack.push_back({p.a, mid});
  }
  return total;
}

// Tanh-sinh rule on (a,b).  Never evaluates f at the endpoints, so integrable
// singularities like 1/sqrt(b-x) are handled directly.  Abscissae are stored
// as distances from the nearer endpoint to dodge cancellation.
template <class F>
double integrate_tanh_sinh(F&& f, double a, double b, double tol = 1e-11, int max_level = 12) {
  if (a == b) return 0.0;
  const double half = 0.5 * (b - a);
  const double pi_half = 1.5707963267948966;
  // Beyond this the weights underflow anyway.
  const double t_max = std::asinh(700.0 / 3.141592653589793);

  auto contribution = [&](double t) -> double {
    const double u = pi_half * std::sinh(t);
    // 1 - tanh(u) = 2 exp(-2u)/(1+exp(-2u)), computed without cancellation
    const double em = std::exp(-2.0 * std::abs(u));
    const double dist = half * 2.0 * em / (1.0 + em);  // distance from nearer endpoint
    if (dist == 0.0) return 0.0;
    const double sech = 2.0 / (std::exp(u) + std::exp(-u));
    const double w = half * pi_half * std::cosh(t) * sech * sech;
    const double x = (u >= 0.0) ? b - dist : a + dist;
    return w * f(x);
  };

  double h = 1.0;
  double sum = contribution(0.0);
  for (double t = h; t <= t_max; t += h) sum += contribution(t) + contribution(-t);
  double integral = h * sum;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h) add += contribution(t) + contribution(-t);
    const double refined = 0.5 * integral + h * add;
    const double change = std::abs(refined - integral);
    integral = refined;
    if (level >= 3 && change <= tol * std::max(1.0, std::abs(integral))) return integral;
  }
  throw NumericError("integrate_tanh_sinh: no convergence within level budget");
}

}  // namespace hrsurf
