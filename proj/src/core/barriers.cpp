#include "core/barriers.hpp"

#include <stdexcept>

namespace hrsurf::barriers {

namespace {

rotational::RotationalSpec critical_spec(const BarrierQuery& q) {
  return {q.n, q.r, rotational::threshold(q.n, q.r), 0.0};
}

}  // namespace

void validate_query(const BarrierQuery& q) {
  rotational::threshold(q.n, q.r);  // validates n, r ranges
  if (q.n <= q.r)
    throw std::invalid_argument("barriers: no entire barrier exists for r >= n");
  if (!(q.R > 0.0)) throw std::invalid_argument("barriers: need R > 0");
}

double height_bound(const BarrierQuery& q) {
  validate_query(q);
  return rotational::lambda_at(critical_spec(q), q.R);
}

double gradient_bound(const BarrierQuery& q) {
  validate_query(q);
  return rotational::dlambda_at(critical_spec(q), q.R);
}

}  // namespace hrsurf::barriers
