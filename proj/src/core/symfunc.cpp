#include "core/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrsurf::symfunc {

SelfAdjointOperator SelfAdjointOperator::from_matrix(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("SelfAdjointOperator: matrix not square");
  if (!is_symmetric(a, rel_tol))
    throw std::invalid_argument("SelfAdjointOperator: matrix not symmetric within tolerance");
  return SelfAdjointOperator{symmetrized(a)};
}

double elementary_symmetric(const Vec& k, int r) {
  if (r < 0) throw std::out_of_range("elementary_symmetric: r < 0");
  const int n = static_cast<int>(k.size());
  if (r > n) return 0.0;
  Vec e(static_cast<size_t>(r) + 1, 0.0);
  e[0] = 1.0;
  for (int m = 0; m < n; ++m)
    for (int j = std::min(r, m + 1); j >= 1; --j) e[j] += e[j - 1] * k[m];
  return e[r];
}

Vec elementary_symmetric_all(const Vec& k) {
  const int n = static_cast<int>(k.size());
  Vec e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  for (int m = 0; m < n; ++m)
    for (int j = std::min(n, m + 1); j >= 1; --j) e[j] += e[j - 1] * k[m];
  return e;
}

double normalized_hr(const Vec& k, int r) {
  const int n = static_cast<int>(k.size());
  if (r < 1 || r > n) throw std::out_of_range("normalized_hr: need 1 <= r <= n");
  return elementary_symmetric(k, r) / binomial(n, r);
}

double normalized_hr(const PrincipalCurvatures& k, int r) { return normalized_hr(k.values, r); }

double sr_partial(const Vec& k, int r, int i) {
  const int n = static_cast<int>(k.size());
  if (r < 1 || r > n) throw std::out_of_range("sr_partial: need 1 <= r <= n");
  if (i < 0 || i >= n) throw std::out_of_range("sr_partial: index out of range");
  Vec rest;
  rest.reserve(k.size() - 1);
  for (int j = 0; j < n; ++j)
    if (j != i) rest.push_back(k[j]);
  return elementary_symmetric(rest, r - 1);
}

namespace {

// Chain with caller-chosen S values (spectral or trace-derived).
std::vector<Matrix> chain_with_s(const Matrix& a, const Vec& s, int upto) {
  const int n = a.rows();
  std::vector<Matrix> p;
  p.reserve(static_cast<size_t>(upto) + 1);
  p.push_back(Matrix::identity(n));
  for (int j = 1; j <= upto; ++j) p.push_back(s[j] * Matrix::identity(n) - a * p.back());
  return p;
}

double rel_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

NewtonChain newton_chain(const Matrix& a, int upto) {
  if (a.rows() != a.cols()) throw std::invalid_argument("newton_chain: matrix not square");
  const int n = a.rows();
  if (upto < 0 || upto > n - 1) throw std::out_of_range("newton_chain: need 0 <= upto <= n-1");
  NewtonChain c;
  c.s.assign(static_cast<size_t>(upto) + 2, 0.0);
  c.s[0] = 1.0;
  c.p.push_back(Matrix::identity(n));
  for (int j = 0; j <= upto; ++j) {
    c.s[j + 1] = trace(c.p[j] * a) / (j + 1);
    if (j < upto) c.p.push_back(c.s[j + 1] * Matrix::identity(n) - a * c.p[j]);
  }
  return c;
}

Matrix newton_tensor(const SelfAdjointOperator& a, int r) {
  const int n = a.dim();
  if (r < 0 || r > n - 1) throw std::out_of_range("newton_tensor: need 0 <= r <= n-1");
  return newton_chain(a.m, r).p[static_cast<size_t>(r)];
}

std::vector<IdentityResiduals> identity_residuals(const SelfAdjointOperator& a) {
  const int n = a.dim();
  const SymEigen eig = sym_eigen(a.m);
  const Vec s = elementary_symmetric_all(eig.values);
  const std::vector<Matrix> p = chain_with_s(a.m, s, n - 1);

  std::vector<IdentityResiduals> rows;
  rows.reserve(n);
  for (int r = 1; r <= n; ++r) {
    IdentityResiduals row{};
    row.r = r;
    const Matrix& pr1 = p[static_cast<size_t>(r) - 1];
    row.pa = rel_gap(r * s[r], trace(pr1 * a.m));
    row.trace = rel_gap(trace(pr1), (n - r + 1) * s[r - 1]);

    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      // eigenvalue of P_{r-1} on the i-th eigenvector of A
      Vec vi(n);
      for (int j = 0; j < n; ++j) vi[j] = eig.vectors(j, i);
      const double lhs = dot(vi, pr1 * vi);
      const double rhs = sr_partial(eig.values, r, i);
      worst = std::max(worst, rel_gap(lhs, rhs));
    }
    row.partial = worst;
    rows.push_back(row);
  }
  return rows;
}

CurvatureReport identity_report(const SelfAdjointOperator& a) {
  const int n = a.dim();
  const SymEigen eig = sym_eigen(a.m);
  const Vec s = elementary_symmetric_all(eig.values);
  const std::vector<IdentityResiduals> rows = identity_residuals(a);

  std::vector<CurvaturePoint> pts;
  pts.reserve(rows.size());
  for (const IdentityResiduals& row : rows) {
    CurvaturePoint pt;
    pt.location = row.r;
    pt.s_r = s[row.r];
    pt.h_r = s[row.r] / binomial(n, row.r);
    pt.residual = std::max({row.pa, row.trace, row.partial});
    pts.push_back(pt);
  }
  return CurvatureReport::from_points(std::move(pts));
}

bool positivity_chain(const PrincipalCurvatures& k, int r) {
  const int n = k.dim();
  if (r < 1 || r > n) throw std::out_of_range("positivity_chain: need 1 <= r <= n");
  const Vec s = elementary_symmetric_all(k.values);
  for (int j = 1; j <= r; ++j)
    if (!(s[j] > 0.0)) return false;
  return true;
}

}  // namespace hrsurf::symfunc
