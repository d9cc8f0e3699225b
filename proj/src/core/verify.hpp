#pragma once

// Re-derives the declared curvature constant of a stored profile, whatever
// its family, and reports the pointwise residuals.  Rotational profiles go
// through the principal-curvature formulas; translational/screw profiles are
// rebuilt as half-space graph jets and pushed through the minor expansion,
// so the verification route is independent of the construction route.

#include "core/profile_curve.hpp"
#include "core/report.hpp"

namespace hrsurf::verify {

CurvatureReport verify_profile(const ProfileCurve& curve);

}  // namespace hrsurf::verify
