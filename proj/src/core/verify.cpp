#include "core/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/graph_curvature.hpp"
#include "core/rotational.hpp"
#include "core/smallmat.hpp"

namespace hrsurf::verify {

namespace {

CurvatureReport verify_screw_family(const ProfileCurve& curve) {
  curve.validate();
  Vec l = curve.l;
  l.resize(static_cast<std::size_t>(curve.n) - 1, 0.0);

  std::vector<CurvaturePoint> pts;
  for (const ProfileRow& row : curve.rows) {
    if (!(row.param > 0.0)) continue;
    if (!std::isfinite(row.dlambda) || !std::isfinite(row.ddlambda)) continue;
    const double sr = graphcurv::screw_sr_minor(curve.n, curve.r, row.param, l, row.lambda,
                                                row.dlambda, row.ddlambda);
    CurvaturePoint pt;
    pt.location = row.param;
    pt.s_r = sr;
    pt.h_r = sr / binomial(curve.n, curve.r);
    pt.residual = curve.target_is_hr ? pt.h_r - curve.target : pt.s_r - curve.target;
    pts.push_back(pt);
  }
  if (pts.empty()) throw std::invalid_argument("verify_profile: no usable interior rows");
  return CurvatureReport::from_points(std::move(pts));
}

}  // namespace

CurvatureReport verify_profile(const ProfileCurve& curve) {
  switch (curve.family) {
    case ProfileFamily::RotationalEntire:
    case ProfileFamily::RotationalCompact: {
      if (!curve.target_is_hr)
        throw std::invalid_argument("verify_profile: rotational target must be H_r");
      rotational::RotationalSpec spec{curve.n, curve.r, curve.target, curve.d};
      return rotational::verify_constant_hr(curve, spec);
    }
    case ProfileFamily::ParabolicMinimal:
    case ProfileFamily::ScrewFlat:
    case ProfileFamily::ScrewOde:
      return verify_screw_family(curve);
  }
  throw std::invalid_argument("verify_profile: unknown profile family");
}

}  // namespace hrsurf::verify
