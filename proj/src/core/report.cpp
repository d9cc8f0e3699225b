#include "core/report.hpp"

#include <cmath>

namespace hrsurf {

CurvatureReport CurvatureReport::from_points(std::vector<CurvaturePoint> pts) {
  CurvatureReport rep;
  rep.points = std::move(pts);
  if (rep.points.empty()) return rep;

  rep.min_residual = rep.points[0].residual;
  rep.max_residual = rep.points[0].residual;
  double sumsq = 0.0;
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const double r = rep.points[i].residual;
    if (r < rep.min_residual) rep.min_residual = r;
    if (r > rep.max_residual) rep.max_residual = r;
    sumsq += r * r;
    if (std::abs(r) > rep.max_abs_residual) {
      rep.max_abs_residual = std::abs(r);
      rep.argmax_index = i;
      rep.argmax_location = rep.points[i].location;
    }
  }
  rep.rms_residual = std::sqrt(sumsq / static_cast<double>(rep.points.size()));
  return rep;
}

}  // namespace hrsurf
