#pragma once

// Elementary symmetric functions of principal curvatures, the normalized
// r-th mean curvature H_r = S_r / C(n,r), and the Newton tensor chain
//   P_0 = Id,  P_r = S_r Id - A P_{r-1}.

#include <vector>

#include "core/report.hpp"
#include "core/smallmat.hpp"

namespace hrsurf::symfunc {

enum class NormalOrientation { Upward, Outward };

struct PrincipalCurvatures {
  Vec values;
  NormalOrientation orientation = NormalOrientation::Upward;
  int dim() const { return static_cast<int>(values.size()); }
};

// Symmetry-checked wrapper around a shape-operator matrix.
struct SelfAdjointOperator {
  Matrix m;
  // Rejects matrices whose asymmetry exceeds rel_tol * max(1, |A|_max),
  // then symmetrizes the survivor.
  static SelfAdjointOperator from_matrix(const Matrix& a, double rel_tol = 1e-12);
  int dim() const { return m.rows(); }
};

// S_r(k); S_0 = 1, S_r = 0 for r > n.  Throws std::out_of_range for r < 0.
double elementary_symmetric(const Vec& k, int r);

// All of S_0 .. S_n in one recurrence pass.
Vec elementary_symmetric_all(const Vec& k);

// H_r = S_r / C(n,r), 1 <= r <= n.
double normalized_hr(const Vec& k, int r);
double normalized_hr(const PrincipalCurvatures& k, int r);

// dS_r/dk_i = S_{r-1} of k with entry i removed.
double sr_partial(const Vec& k, int r, int i);

// Newton tensors P_0..P_upto of an (arbitrary-frame) operator together with
// the symmetric functions S_1..S_{upto+1} obtained from the trace recursion
// S_{j+1} = tr(P_j A)/(j+1).
struct NewtonChain {
  std::vector<Matrix> p;  // p[j] = P_j, j = 0..upto
  Vec s;                  // s[j] = S_j, j = 0..upto+1
};
NewtonChain newton_chain(const Matrix& a, int upto);

// P_r of a self-adjoint operator, 0 <= r <= n-1.
Matrix newton_tensor(const SelfAdjointOperator& a, int r);

// Internal consistency of one operator, one row per degree r = 1..n.  The
// Newton chain is built from the *spectral* S_r so each line compares two
// independent routes:
//   pa:       r S_r - tr(P_{r-1} A)
//   trace:    tr(P_{r-1}) - (n-r+1) S_{r-1}
//   partial:  max_i | eig_i(P_{r-1}) - dS_r/dk_i |
// all relative to max(1, |lhs|, |rhs|).
struct IdentityResiduals {
  int r;
  double pa;
  double trace;
  double partial;
};
std::vector<IdentityResiduals> identity_residuals(const SelfAdjointOperator& a);

// Same data folded into the generic report shape: location = r,
// residual = max of the three identity residuals at that degree.
CurvatureReport identity_report(const SelfAdjointOperator& a);

// True when S_1, ..., S_r are all strictly positive (the ellipticity chain).
bool positivity_chain(const PrincipalCurvatures& k, int r);

}  // namespace hrsurf::symfunc
