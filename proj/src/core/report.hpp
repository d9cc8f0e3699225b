#pragma once

// Shared result type for pointwise curvature verification.

#include <cstddef>
#include <vector>

namespace hrsurf {

struct CurvaturePoint {
  double location = 0.0;  // parameter value / grid index, whatever the caller samples over
  double s_r = 0.0;
  double h_r = 0.0;
  double residual = 0.0;
};

struct CurvatureReport {
  std::vector<CurvaturePoint> points;

  double min_residual = 0.0;
  double max_residual = 0.0;
  double rms_residual = 0.0;
  double max_abs_residual = 0.0;
  std::size_t argmax_index = 0;
  double argmax_location = 0.0;

  static CurvatureReport from_points(std::vector<CurvaturePoint> pts);
};

}  // namespace hrsurf
