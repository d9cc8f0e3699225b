#pragma once

// Curvature of vertical graphs t = u(x) over a conformal model of hyperbolic
// space.  With W^2 = 1 + F^2 |grad u|^2 the fundamental forms in Euclidean
// coordinates are
//   I_ij  = delta_ij / F^2 + u_i u_j
//   II_ij = u_ij / W + (u_i F_j + u_j F_i - <grad u, grad F> delta_ij) / (F W)
// and the shape operator is A = I^{-1} II (similar to a symmetric matrix via
// the Cholesky congruence of I, which is what guarantees a real spectrum).

#include "core/ambient.hpp"
#include "core/graph_sample.hpp"
#include "core/report.hpp"
#include "core/smallmat.hpp"
#include "core/symfunc.hpp"

namespace hrsurf::graphcurv {

// Second-order data of u at one point.
struct GraphJet {
  double u = 0.0;
  Vec grad;
  Matrix hess;

  int dim() const { return static_cast<int>(grad.size()); }
  // Validates dimensions and Hessian symmetry (tolerance relative to the
  // largest entry), then stores the symmetrized Hessian.
  static GraphJet make(double u, Vec grad, Matrix hess, double sym_tol = 1e-12);
};

double w_factor(const GraphJet& jet, double F);

struct FundamentalForms {
  Matrix first;      // I
  Matrix second;     // II
  Matrix first_inv;  // closed-form inverse of I, checked against I to 1e-10
  double W = 0.0;
};

FundamentalForms fundamental_forms(const GraphJet& jet, double F, const Vec& grad_f);

struct ShapeOperator {
  Matrix coordinate;  // A = I^{-1} II, generally not symmetric
  Matrix symmetric;   // L^{-1} II L^{-T} with I = L L^T, similar to A
  Vec curvatures;     // eigenvalues, ascending
  symfunc::NormalOrientation orientation = symfunc::NormalOrientation::Upward;
};

ShapeOperator shape_operator(const GraphJet& jet, double F, const Vec& grad_f);

// S_r via the spectrum of the shape operator.
double sr_from_spectrum(const GraphJet& jet, double F, const Vec& grad_f, int r);

// S_r via the minor expansion of V = W * II:
//   S_r W^{r+2} / F^{2r} =   sum_{|J|=r} (W^2 - F^2 sum_{j in J} u_j^2) det V_JJ
//                          - 2 F^2 sum_{i<k} u_i u_k sum_{J'} det V[(i,J'),(k,J')]
// where J' runs over the (r-1)-subsets avoiding i and k.  No eigenvalue
// computation involved, which makes this the natural cross-check partner of
// sr_from_spectrum.
double sr_from_minors(const GraphJet& jet, double F, const Vec& grad_f, int r);

// Jet of a screw-type graph u = lambda(y) + sum_i l_i x_i over the half-space
// model (y is the last coordinate); n = l.size() + 1.
GraphJet screw_jet(const Vec& l, double lambda, double dlambda, double ddlambda);

// Convenience: S_r of that screw graph at height y (half-space, F = y).
double screw_sr_minor(int n, int r, double y, const Vec& l, double lambda, double dlambda,
                      double ddlambda);

// Ricci tensor of <,>/F^2 in the Euclidean coordinate frame,
//   Ric_ij = (n-2) F_ij / F + (Lap F / F - (n-1) |grad F|^2 / F^2) delta_ij.
// For both models this reduces to -(n-1)/F^2 delta_ij; kept as an
// independent route for the curvature-term cross-check below.
Matrix ricci_conformal(const ambient::AmbientSpec& spec, const Vec& coords);

// Discrete check of the flux identity
//   (r+1) S_{r+1} = F^2 div(P_r grad u / W)
//                   + (2-n) F <P_r grad u, grad F> / W
//                   - (n-r) F^2 <P_{r-1} grad u / W, grad u / W>
// (Euclidean divergence / gradients / products throughout).  Jets come from
// centered second-order differences, the divergence from centered first
// differences of the assembled flux, so residual points need a two-cell
// margin; every axis must have at least 5 nodes.  The left side is evaluated
// through the spectral route, making the comparison a genuine two-route test.
struct DivergenceReport {
  CurvatureReport report;        // location = flat grid index, s_r/h_r = degree r+1 values
  double ricci_crosscheck = 0.0; // r == 1 only: closed-form curvature term vs ricci_conformal
};

DivergenceReport divergence_residual(const GraphSample& sample, int r);

// log2(rms[i] / rms[i+1]) for a sequence of residual norms at h, h/2, h/4, ...
Vec convergence_slopes(const Vec& rms);

}  // namespace hrsurf::graphcurv
