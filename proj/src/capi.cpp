#include "hrsurf/hrsurf.h"

#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "core/barriers.hpp"
#include "core/errors.hpp"
#include "core/graph_curvature.hpp"
#include "core/graph_sample.hpp"
#include "core/mesh_export.hpp"
#include "core/parabolic.hpp"
#include "core/profile_curve.hpp"
#include "core/rotational.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

#include <fstream>

struct hrs_profile {
  hrsurf::ProfileCurve curve;
};

struct hrs_sample {
  hrsurf::GraphSample sample;
};

namespace {

thread_local std::string t_last_error;

int fail(int status, const char* what) {
  t_last_error = what;
  return status;
}

// exception -> status; most-derived types first (NumericError sits under
// runtime_error, ios_base::failure under system_error/runtime_error, and
// domain_error/invalid_argument/... under logic_error)
template <class Fn>
int guard(Fn&& fn) noexcept {
  try {
    fn();
    return HRS_OK;
  } catch (const hrsurf::NumericError& e) {
    return fail(HRS_NUMERIC, e.what());
  } catch (const std::domain_error& e) {
    return fail(HRS_DOMAIN, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(HRS_IO, e.what());
  } catch (const std::logic_error& e) {
    return fail(HRS_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HRS_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HRS_ERROR, e.what());
  } catch (...) {
    return fail(HRS_ERROR, "unknown failure");
  }
}

int need(const void*, const char* name) {
  return fail(HRS_INVALID_ARGUMENT, (std::string(name) + " must not be NULL").c_str());
}

hrsurf::rotational::RotationalSpec make_spec(int n, int r, double hr) {
  return {n, r, hr, 0.0};
}

int emit_profile(hrsurf::ProfileCurve curve, hrs_profile** out) {
  *out = new hrs_profile{std::move(curve)};
  return HRS_OK;
}

}  // namespace

extern "C" {

const char* hrs_status_name(int status) {
  switch (status) {
    case HRS_OK: return "ok";
    case HRS_ERROR: return "error";
    case HRS_INVALID_ARGUMENT: return "invalid-argument";
    case HRS_DOMAIN: return "domain";
    case HRS_NUMERIC: return "numeric";
    case HRS_IO: return "io";
    default: return "unknown";
  }
}

const char* hrs_last_error(void) { return t_last_error.c_str(); }

int hrs_abi_version(void) { return 1; }

int hrs_format_double(double x, char* buf, size_t cap) {
  const std::string s = hrsurf::format_double(x);
  if (s.size() + 1 > cap) return -1;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return static_cast<int>(s.size());
}

int hrs_threshold(int n, int r, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::threshold(n, r); });
}

int hrs_classify(int n, int r, double hr, int* out_compact) {
  if (!out_compact) return need(out_compact, "out_compact");
  return guard([&] {
    *out_compact = hrsurf::rotational::classify(make_spec(n, r, hr)) ==
                   hrsurf::rotational::Classification::CompactSphere;
  });
}

int hrs_classify_rational(int n, int r, long long num, long long den, int* out_compact) {
  if (!out_compact) return need(out_compact, "out_compact");
  return guard([&] {
    *out_compact = hrsurf::rotational::classify_rational(n, r, num, den) ==
                   hrsurf::rotational::Classification::CompactSphere;
  });
}

const char* hrs_classification_name(int is_compact) {
  return hrsurf::rotational::classification_name(
      is_compact ? hrsurf::rotational::Classification::CompactSphere
                 : hrsurf::rotational::Classification::EntireGraph);
}

int hrs_rotational_integral(int n, int r, double xi, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::integral_I(n, r, xi); });
}

int hrs_pq(int n, int r, double hr, double d, double xi, double* p, double* q) {
  if (!p) return need(p, "p");
  if (!q) return need(q, "q");
  return guard([&] {
    const hrsurf::rotational::PQ v =
        hrsurf::rotational::pq({n, r, hr, d}, xi);
    *p = v.p;
    *q = v.q;
  });
}

int hrs_rho0(int n, int r, double hr, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::rho0(make_spec(n, r, hr)); });
}

int hrs_lambda(int n, int r, double hr, double rho, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::lambda_at(make_spec(n, r, hr), rho); });
}

int hrs_dlambda(int n, int r, double hr, double rho, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::dlambda_at(make_spec(n, r, hr), rho); });
}

int hrs_ddlambda(int n, int r, double hr, double rho, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::rotational::ddlambda_at(make_spec(n, r, hr), rho); });
}

int hrs_height_bound(int n, int r, double R, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::barriers::height_bound({n, r, R}); });
}

int hrs_gradient_bound(int n, int r, double R, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::barriers::gradient_bound({n, r, R}); });
}

int hrs_entire_log_slope(int n, double k, double* out) {
  if (!out) return need(out, "out");
  return guard([&] { *out = hrsurf::parabolic::entire_log_slope(n, k); });
}

int hrs_profile_rotational(int n, int r, double hr, int samples, double rho_max,
                           hrs_profile** out) {
  if (!out) return need(out, "out");
  return guard([&] {
    emit_profile(hrsurf::rotational::profile(make_spec(n, r, hr), samples, rho_max), out);
  });
}

int hrs_profile_parabolic_minimal(int n, int r, double c, int samples, hrs_profile** out) {
  if (!out) return need(out, "out");
  return guard(
      [&] { emit_profile(hrsurf::parabolic::minimal_profile(n, r, c, samples), out); });
}

int hrs_profile_screw_flat(double c, double l, int samples, hrs_profile** out) {
  if (!out) return need(out, "out");
  return guard(
      [&] { emit_profile(hrsurf::parabolic::flat_screw_profile(c, l, samples), out); });
}

int hrs_profile_screw_ode(int n, double s2, double l, double d, int has_psi0, double psi0,
                          double y0, double y1, int steps, hrs_profile** out) {
  if (!out) return need(out, "out");
  return guard([&] {
    hrsurf::parabolic::ScrewOdeParams params;
    params.n = n;
    params.s2 = s2;
    params.l = l;
    params.d = d;
    if (has_psi0) params.psi0 = psi0;
    params.y0 = y0;
    params.y1 = y1;
    params.steps = steps;
    emit_profile(hrsurf::parabolic::screw_ode_solve(params), out);
  });
}

int hrs_profile_read(const char* path, hrs_profile** out) {
  if (!path) return need(path, "path");
  if (!out) return need(out, "out");
  return guard([&] { emit_profile(hrsurf::read_profile(path), out); });
}

int hrs_profile_write(const hrs_profile* p, const char* path) {
  if (!p) return need(p, "profile");
  if (!path) return need(path, "path");
  return guard([&] { hrsurf::write_profile(p->curve, path); });
}

int hrs_profile_write_mesh(const hrs_profile* p, const char* path, int segments, int closed) {
  if (!p) return need(p, "profile");
  if (!path) return need(path, "path");
  return guard([&] {
    hrsurf::mesh::TriMesh mesh;
    if (closed) {
      hrsurf::rotational::RotationalSpec spec{p->curve.n, p->curve.r, p->curve.target, 0.0};
      mesh = hrsurf::mesh::revolve_closed(
          hrsurf::rotational::glue_closed_profile(p->curve, spec), segments);
    } else {
      mesh = hrsurf::mesh::revolve_profile(p->curve, segments);
    }
    hrsurf::mesh::write_off_file(mesh, path);
  });
}

int hrs_profile_write_closed_path(const hrs_profile* p, const char* path) {
  if (!p) return need(p, "profile");
  if (!path) return need(path, "path");
  return guard([&] {
    hrsurf::rotational::RotationalSpec spec{p->curve.n, p->curve.r, p->curve.target, 0.0};
    const hrsurf::rotational::ClosedProfile closed =
        hrsurf::rotational::glue_closed_profile(p->curve, spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure(std::string("cannot open for writing: ") + path);
    hrsurf::rotational::write_closed_path_csv(closed, out);
    if (!out) throw std::ios_base::failure(std::string("write failed: ") + path);
  });
}

int hrs_profile_rows(const hrs_profile* p) {
  return p ? static_cast<int>(p->curve.rows.size()) : 0;
}

int hrs_profile_row(const hrs_profile* p, int i, double* param, double* lambda,
                    double* dlambda, double* ddlambda) {
  if (!p) return need(p, "profile");
  if (i < 0 || i >= static_cast<int>(p->curve.rows.size()))
    return fail(HRS_INVALID_ARGUMENT, "row index out of range");
  const hrsurf::ProfileRow& row = p->curve.rows[static_cast<std::size_t>(i)];
  if (param) *param = row.param;
  if (lambda) *lambda = row.lambda;
  if (dlambda) *dlambda = row.dlambda;
  if (ddlambda) *ddlambda = row.ddlambda;
  return HRS_OK;
}

const char* hrs_profile_family(const hrs_profile* p) {
  return p ? hrsurf::family_name(p->curve.family) : "";
}

int hrs_profile_meta(const hrs_profile* p, int* n, int* r, double* target, int* target_is_hr,
                     double* domain_a, double* domain_b, int* endpoint_singular,
                     int* truncated) {
  if (!p) return need(p, "profile");
  if (n) *n = p->curve.n;
  if (r) *r = p->curve.r;
  if (target) *target = p->curve.target;
  if (target_is_hr) *target_is_hr = p->curve.target_is_hr;
  if (domain_a) *domain_a = p->curve.domain_a;
  if (domain_b) *domain_b = p->curve.domain_b;
  if (endpoint_singular) *endpoint_singular = p->curve.endpoint_singular;
  if (truncated) *truncated = p->curve.truncated;
  return HRS_OK;
}

int hrs_profile_verify(const hrs_profile* p, double* max_abs_residual, double* rms_residual) {
  if (!p) return need(p, "profile");
  return guard([&] {
    const hrsurf::CurvatureReport report = hrsurf::verify::verify_profile(p->curve);
    if (max_abs_residual) *max_abs_residual = report.max_abs_residual;
    if (rms_residual) *rms_residual = report.rms_residual;
  });
}

int hrs_profile_gluing_height(const hrs_profile* p, double* t0) {
  if (!p) return need(p, "profile");
  if (!t0) return need(t0, "t0");
  return guard([&] {
    hrsurf::rotational::RotationalSpec spec{p->curve.n, p->curve.r, p->curve.target, 0.0};
    *t0 = hrsurf::rotational::glue_closed_profile(p->curve, spec).t0;
  });
}

void hrs_profile_free(hrs_profile* p) { delete p; }

int hrs_sample_read(const char* path, hrs_sample** out) {
  if (!path) return need(path, "path");
  if (!out) return need(out, "out");
  return guard([&] { *out = new hrs_sample{hrsurf::read_sample(path)}; });
}

void hrs_sample_free(hrs_sample* s) { delete s; }

int hrs_divergence_residual(const hrs_sample* s, int r, double* max_abs_residual,
                            double* rms_residual) {
  if (!s) return need(s, "sample");
  return guard([&] {
    const hrsurf::graphcurv::DivergenceReport report =
        hrsurf::graphcurv::divergence_residual(s->sample, r);
    if (max_abs_residual) *max_abs_residual = report.report.max_abs_residual;
    if (rms_residual) *rms_residual = report.report.rms_residual;
  });
}

}  // extern "C"
