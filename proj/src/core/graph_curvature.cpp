#include "core/graph_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace hrsurf::graphcurv {

GraphJet GraphJet::make(double u, Vec grad, Matrix hess, double sym_tol) {
  const int n = static_cast<int>(grad.size());
  if (n < 1) throw std::invalid_argument("GraphJet: empty gradient");
  if (hess.rows() != n || hess.cols() != n)
    throw std::invalid_argument("GraphJet: Hessian dimension mismatch");
  if (!is_symmetric(hess, sym_tol))
    throw std::invalid_argument("GraphJet: Hessian not symmetric within tolerance");
  GraphJet jet;
  jet.u = u;
  jet.grad = std::move(grad);
  jet.hess = symmetrized(hess);
  return jet;
}

double w_factor(const GraphJet& jet, double F) {
  if (!(F > 0.0)) throw std::domain_error("w_factor: need F > 0");
  return std::sqrt(1.0 + F * F * norm2(jet.grad));
}

FundamentalForms fundamental_forms(const GraphJet& jet, double F, const Vec& grad_f) {
  const int n = jet.dim();
  if (static_cast<int>(grad_f.size()) != n)
    throw std::invalid_argument("fundamental_forms: grad F dimension mismatch");
  if (!(F > 0.0)) throw std::domain_error("fundamental_forms: need F > 0");

  FundamentalForms out;
  out.W = w_factor(jet, F);
  const double W = out.W;
  const double F2 = F * F;
  const double udotf = dot(jet.grad, grad_f);

  out.first = Matrix(n, n);
  out.second = Matrix(n, n);
  out.first_inv = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ui = jet.grad[i], uj = jet.grad[j];
      const double kron = (i == j) ? 1.0 : 0.0;
      out.first(i, j) = kron / F2 + ui * uj;
      out.second(i, j) =
          jet.hess(i, j) / W + (ui * grad_f[j] + uj * grad_f[i] - udotf * kron) / (F * W);
      out.first_inv(i, j) = F2 * kron - F2 * F2 * ui * uj / (W * W);
    }
  }

  // The closed-form inverse should reproduce the identity to rounding.
  const Matrix product = out.first * out.first_inv;
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(product(i, j) - (i == j ? 1.0 : 0.0)));
  if (dev > 1e-10)
    throw NumericError("fundamental_forms: closed-form inverse check failed");
  return out;
}

ShapeOperator shape_operator(const GraphJet& jet, double F, const Vec& grad_f) {
  const FundamentalForms forms = fundamental_forms(jet, F, grad_f);
  ShapeOperator out;
  out.coordinate = forms.first_inv * forms.second;
  // congruence I = L L^T turns A into the symmetric L^{-1} II L^{-T}
  const Matrix l = cholesky_lower(forms.first);
  const Matrix x = solve_lower(l, forms.second);
  out.symmetric = symmetrized(transpose(solve_lower(l, transpose(x))));
  out.curvatures = sym_eigen(out.symmetric).values;
  return out;
}

double sr_from_spectrum(const GraphJet& jet, double F, const Vec& grad_f, int r) {
  const int n = jet.dim();
  if (r < 1 || r > n) throw std::out_of_range("sr_from_spectrum: need 1 <= r <= n");
  const ShapeOperator op = shape_operator(jet, F, grad_f);
  return symfunc::elementary_symmetric(op.curvatures, r);
}

namespace {

// Sorted r-subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[i] == n - r + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int r) {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  return c;
}

double submatrix_det(const Matrix& v, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int r = static_cast<int>(rows.size());
  Matrix sub(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sub(i, j) = v(rows[i], cols[j]);
  return determinant(std::move(sub));
}

}  // namespace

double sr_from_minors(const GraphJet& jet, double F, const Vec& grad_f, int r) {
  const int n = jet.dim();
  if (r < 1 || r > n) throw std::out_of_range("sr_from_minors: need 1 <= r <= n");
  if (static_cast<int>(grad_f.size()) != n)
    throw std::invalid_argument("sr_from_minors: grad F dimension mismatch");
  if (!(F > 0.0)) throw std::domain_error("sr_from_minors: need F > 0");

  const double W = w_factor(jet, F);
  const double W2 = W * W;
  const double F2 = F * F;
  const double udotf = dot(jet.grad, grad_f);

  // V = W * II, assembled directly from the jet
  Matrix v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      v(i, j) = jet.hess(i, j) +
                (jet.grad[i] * grad_f[j] + jet.grad[j] * grad_f[i] - (i == j ? udotf : 0.0)) / F;

  // principal minors weighted by W^2 - F^2 sum_{j in J} u_j^2
  double principal = 0.0;
  {
    std::vector<int> J = first_combination(r);
    do {
      double usq = 0.0;
      for (int j : J) usq += jet.grad[j] * jet.grad[j];
      principal += (W2 - F2 * usq) * submatrix_det(v, J, J);
    } while (next_combination(J, n));
  }

  // mixed minors: rows (i, J'), columns (k, J') for i < k, J' avoiding both
  double mixed = 0.0;
  if (r >= 1 && n >= 2) {
    std::vector<int> rows(r), cols(r);
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        const double uik = jet.grad[i] * jet.grad[k];
        if (uik == 0.0) continue;
        std::vector<int> rest;
        rest.reserve(n - 2);
        for (int m = 0; m < n; ++m)
          if (m != i && m != k) rest.push_back(m);
        if (r - 1 > static_cast<int>(rest.size())) continue;
        std::vector<int> pick = first_combination(r - 1);
        do {
          rows[0] = i;
          cols[0] = k;
          for (int m = 0; m < r - 1; ++m) rows[m + 1] = cols[m + 1] = rest[pick[m]];
          mixed += uik * submatrix_det(v, rows, cols);
        } while (next_combination(pick, static_cast<int>(rest.size())));
      }
    }
  }

  const double bracket = principal - 2.0 * F2 * mixed;
  return bracket * std::pow(F, 2 * r) / std::pow(W, r + 2);
}

GraphJet screw_jet(const Vec& l, double lambda, double dlambda, double ddlambda) {
  const int n = static_cast<int>(l.size()) + 1;
  Vec grad(l);
  grad.push_back(dlambda);
  Matrix hess(n, n);
  hess(n - 1, n - 1) = ddlambda;
  return GraphJet::make(lambda, std::move(grad), std::move(hess));
}

double screw_sr_minor(int n, int r, double y, const Vec& l, double lambda, double dlambda,
                      double ddlambda) {
  if (static_cast<int>(l.size()) != n - 1)
    throw std::invalid_argument("screw_sr_minor: pitch vector must have n-1 entries");
  if (!(y > 0.0)) throw std::domain_error("screw_sr_minor: need y > 0");
  const GraphJet jet = screw_jet(l, lambda, dlambda, ddlambda);
  Vec grad_f(n, 0.0);
  grad_f.back() = 1.0;
  return sr_from_minors(jet, y, grad_f, r);
}

Matrix ricci_conformal(const ambient::AmbientSpec& spec, const Vec& coords) {
  const ambient::ConformalFactor c = ambient::conformal_factor(spec, coords);
  const int n = spec.n;
  double lap = 0.0;
  for (int i = 0; i < n; ++i) lap += c.hess(i, i);
  const double common = lap / c.F - (n - 1) * norm2(c.grad) / (c.F * c.F);
  Matrix ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ric(i, j) = (n - 2) * c.hess(i, j) / c.F + (i == j ? common : 0.0);
  return ric;
}

DivergenceReport divergence_residual(const GraphSample& sample, int r) {
  sample.validate();
  const int n = sample.spec.n;
  if (r < 1 || r + 1 > n)
    throw std::out_of_range("divergence_residual: need 1 <= r <= n-1");
  for (int c : sample.counts)
    if (c < 5) throw std::length_error("divergence_residual: every axis needs >= 5 nodes");

  const std::size_t total = sample.total();
  std::vector<std::size_t> stride(n, 1);
  for (int a = n - 2; a >= 0; --a)
    stride[a] = stride[a + 1] * static_cast<std::size_t>(sample.counts[a + 1]);

  std::vector<double> phi(total * static_cast<std::size_t>(n), 0.0);
  std::vector<double> lhs(total, 0.0), extra(total, 0.0), fval(total, 0.0);
  std::vector<char> have_jet(total, 0);
  double ricci_gap = 0.0;

  const Vec& h = sample.spacing;
  const Vec& val = sample.values;

  for (std::size_t flat = 0; flat < total; ++flat) {
    const std::vector<int> idx = sample.multi_index(flat);
    bool interior = true;
    for (int a = 0; a < n; ++a)
      if (idx[a] < 1 || idx[a] > sample.counts[a] - 2) interior = false;
    if (!interior) continue;

    // centered second-order jet
    Vec grad(n);
    Matrix hess(n, n);
    for (int a = 0; a < n; ++a) {
      const double up = val[flat + stride[a]];
      const double dn = val[flat - stride[a]];
      grad[a] = (up - dn) / (2.0 * h[a]);
      hess(a, a) = (up - 2.0 * val[flat] + dn) / (h[a] * h[a]);
      for (int b = a + 1; b < n; ++b) {
        const double pp = val[flat + stride[a] + stride[b]];
        const double pm = val[flat + stride[a] - stride[b]];
        const double mp = val[flat - stride[a] + stride[b]];
        const double mm = val[flat - stride[a] - stride[b]];
        hess(a, b) = hess(b, a) = (pp - pm - mp + mm) / (4.0 * h[a] * h[b]);
      }
    }
    const GraphJet jet = GraphJet::make(val[flat], grad, hess);
    const Vec point = sample.point(idx);
    const ambient::ConformalFactor conf = ambient::conformal_factor(sample.spec, point);
    const FundamentalForms forms = fundamental_forms(jet, conf.F, conf.grad);
    const double W = forms.W;
    const double F2 = conf.F * conf.F;

    const Matrix a_coord = forms.first_inv * forms.second;
    const symfunc::NewtonChain chain = symfunc::newton_chain(a_coord, r);
    const Vec pr_grad = chain.p[static_cast<std::size_t>(r)] * jet.grad;
    const Vec pr1_grad = chain.p[static_cast<std::size_t>(r) - 1] * jet.grad;

    for (int a = 0; a < n; ++a)
      phi[flat * static_cast<std::size_t>(n) + a] = pr_grad[a] / W;
    fval[flat] = conf.F;
    extra[flat] = (2 - n) * conf.F * dot(pr_grad, conf.grad) / W -
                  (n - r) * F2 * dot(pr1_grad, jet.grad) / (W * W);

    // spectral left side
    const Matrix l = cholesky_lower(forms.first);
    const Matrix x = solve_lower(l, forms.second);
    const Matrix b = symmetrized(transpose(solve_lower(l, transpose(x))));
    lhs[flat] = (r + 1) * symfunc::elementary_symmetric(sym_eigen(b).values, r + 1);
    have_jet[flat] = 1;

    if (r == 1) {
      // same curvature term through the conformal Ricci formula
      const Matrix ric = ricci_conformal(sample.spec, point);
      Vec vg(n);
      for (int a = 0; a < n; ++a) vg[a] = F2 * jet.grad[a] / W;
      double sy = 0.0;
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) sy += vg[a] * ric(a, bb) * vg[bb];
      const double closed = -(n - 1) * F2 * norm2(jet.grad) / (W * W);
      ricci_gap = std::max(ricci_gap, std::abs(sy - closed));
    }
  }

  std::vector<CurvaturePoint> pts;
  for (std::size_t flat = 0; flat < total; ++flat) {
    const std::vector<int> idx = sample.multi_index(flat);
    bool deep = true;
    for (int a = 0; a < n; ++a)
      if (idx[a] < 2 || idx[a] > sample.counts[a] - 3) deep = false;
    if (!deep) continue;

    double div_phi = 0.0;
    for (int a = 0; a < n; ++a) {
      const std::size_t up = flat + stride[a], dn = flat - stride[a];
      if (!have_jet[up] || !have_jet[dn])
        throw NumericError("divergence_residual: missing flux neighbor");
      div_phi += (phi[up * static_cast<std::size_t>(n) + a] -
                  phi[dn * static_cast<std::size_t>(n) + a]) /
                 (2.0 * h[a]);
    }
    const double rhs = fval[flat] * fval[flat] * div_phi + extra[flat];

    CurvaturePoint pt;
    pt.location = static_cast<double>(flat);
    pt.s_r = lhs[flat] / (r + 1);
    pt.h_r = pt.s_r / binomial(n, r + 1);
    pt.residual = lhs[flat] - rhs;
    pts.push_back(pt);
  }
  if (pts.empty())
    throw std::length_error("divergence_residual: no interior nodes with a two-cell margin");

  DivergenceReport out;
  out.report = CurvatureReport::from_points(std::move(pts));
  out.ricci_crosscheck = ricci_gap;
  return out;
}

Vec convergence_slopes(const Vec& rms) {
  if (rms.size() < 2)
    throw std::invalid_argument("convergence_slopes: need at least two resolutions");
  Vec out;
  for (std::size_t i = 0; i + 1 < rms.size(); ++i) {
    if (!(rms[i] > 0.0) || !(rms[i + 1] > 0.0))
      throw std::invalid_argument("convergence_slopes: residual norms must be positive");
    out.push_back(std::log2(rms[i] / rms[i + 1]));
  }
  return out;
}

}  // namespace hrsurf::graphcurv
