#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/graph_sample.hpp"
#include "core/mesh_export.hpp"
#include "core/parabolic.hpp"
#include "core/profile_curve.hpp"
#include "core/rotational.hpp"
#include "hrsurf/hrsurf.h"

using namespace hrsurf;

namespace {

std::filesystem::path tmp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hrsurf_test_" + name);
}

struct FileGuard {
  std::filesystem::path p;
  explicit FileGuard(std::filesystem::path path) : p(std::move(path)) {}
  ~FileGuard() { std::filesystem::remove(p); }
};

bool rows_equal(const ProfileCurve& a, const ProfileCurve& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto same = [](double x, double y) {
      return (std::isnan(x) && std::isnan(y)) || x == y;
    };
    if (!same(a.rows[i].param, b.rows[i].param)) return false;
    if (!same(a.rows[i].lambda, b.rows[i].lambda)) return false;
    if (!same(a.rows[i].dlambda, b.rows[i].dlambda)) return false;
    if (!same(a.rows[i].ddlambda, b.rows[i].ddlambda)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("profile round trip is bit exact") {
  const rotational::RotationalSpec spec{2, 2, 1.0, 0.0};
  const ProfileCurve curve = rotational::profile(spec, 16);  // ends with NaN derivatives

  for (const char* ext : {".csv", ".json"}) {
    const FileGuard f(tmp_path(std::string("roundtrip") + ext));
    write_profile(curve, f.p.string());
    const ProfileCurve back = read_profile(f.p.string());
    CHECK(back.family == curve.family);
    CHECK(back.param_name == curve.param_name);
    CHECK(back.n == curve.n);
    CHECK(back.r == curve.r);
    CHECK(back.target == curve.target);
    CHECK(back.target_is_hr == curve.target_is_hr);
    CHECK(back.d == curve.d);
    CHECK(back.c == curve.c);
    CHECK(back.l == curve.l);
    CHECK(back.domain_a == curve.domain_a);
    CHECK(back.domain_b == curve.domain_b);
    CHECK(back.endpoint_singular == curve.endpoint_singular);
    CHECK(back.truncated == curve.truncated);
    CHECK(rows_equal(back, curve));
  }

  // screw metadata (pitch vector) survives as well
  const ProfileCurve screw = parabolic::flat_screw_profile(1.1, 0.7, 12);
  const FileGuard f(tmp_path("screw.json"));
  write_profile(screw, f.p.string());
  const ProfileCurve back = read_profile(f.p.string());
  CHECK(back.l == screw.l);
  CHECK(rows_equal(back, screw));
}

TEST_CASE("profile IO failures") {
  CHECK_THROWS_AS((void)read_profile("/nonexistent/dir/file.csv"), std::ios_base::failure);

  const FileGuard f(tmp_path("garbage.csv"));
  std::ofstream(f.p) << "not,a,profile\n1,2,3\n";
  CHECK_THROWS_AS((void)read_profile(f.p.string()), std::invalid_argument);

  const ProfileCurve curve = parabolic::minimal_profile(3, 2, 1.0, 8);
  CHECK_THROWS_AS(write_profile(curve, "/nonexistent/dir/file.csv"), std::ios_base::failure);
}

TEST_CASE("hand-written profile CSV parses") {
  const FileGuard f(tmp_path("hand.csv"));
  std::ofstream(f.p) << "# hrsurf profile\n"
                        "# schema: 1\n"
                        "# family: rotational-entire\n"
                        "# param: rho\n"
                        "# n: 3\n"
                        "# r: 2\n"
                        "# target: H_r 0.25\n"
                        "# d: 0\n"
                        "# domain: 0 inf\n"
                        "# truncated: 1\n"
                        "rho,lambda,dlambda,ddlambda\n"
                        "0,0,0,0.5\n"
                        "1,0.26,0.53,0.56\n";
  const ProfileCurve c = read_profile(f.p.string());
  CHECK(c.family == ProfileFamily::RotationalEntire);
  CHECK(c.n == 3);
  CHECK(c.target == 0.25);
  CHECK(c.truncated);
  CHECK(std::isinf(c.domain_b));
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[1].dlambda == 0.53);
}

TEST_CASE("sample round trip") {
  const ambient::AmbientSpec spec{2, ambient::Model::HalfSpace};
  const GraphSample s = GraphSample::from_function(
      spec, {0.1, 0.5}, {0.05, 0.04}, {6, 7},
      [](const Vec& p) { return std::sin(p[0]) + p[1] * p[1]; });
  for (const char* ext : {".csv", ".json"}) {
    const FileGuard f(tmp_path(std::string("sample") + ext));
    write_sample(s, f.p.string());
    const GraphSample back = read_sample(f.p.string());
    CHECK(back.spec.n == 2);
    CHECK(back.spec.model == ambient::Model::HalfSpace);
    CHECK(back.origin == s.origin);
    CHECK(back.spacing == s.spacing);
    CHECK(back.counts == s.counts);
    CHECK(back.values == s.values);
  }

  // indexing helpers
  CHECK(s.total() == 42);
  CHECK(s.flat_index({1, 2}) == 9);
  CHECK(s.multi_index(9) == std::vector<int>{1, 2});
  const Vec p = s.point({1, 2});
  CHECK(p[0] == doctest::Approx(0.15));
  CHECK(p[1] == doctest::Approx(0.58));
}

TEST_CASE("mesh export") {
  const rotational::RotationalSpec es{3, 2, 0.2, 0.0};
  const ProfileCurve entire = rotational::profile(es, 4, 2.0);  // 5 rows, apex first
  const mesh::TriMesh m = mesh::revolve_profile(entire, 6);
  CHECK(m.vertices.size() == 1 + 4 * 6);
  CHECK(m.faces.size() == 6 + 3 * 2 * 6);
  for (const auto& face : m.faces)
    for (int idx : face) {
      CHECK(idx >= 0);
      CHECK(idx < static_cast<int>(m.vertices.size()));
    }
  // ring radius is the ball-model radius of the revolved row
  const auto& ring1 = m.vertices[1];  // first vertex of the first ring
  const double want = std::tanh(entire.rows[1].param / 2.0);
  CHECK(std::hypot(ring1[0], ring1[1]) == doctest::Approx(want).epsilon(1e-12));

  const rotational::RotationalSpec cs{2, 2, 1.0, 0.0};
  const ProfileCurve compact = rotational::profile(cs, 4);
  const auto closed = rotational::glue_closed_profile(compact, cs);
  const mesh::TriMesh mc = mesh::revolve_closed(closed, 6);
  CHECK(mc.vertices.size() == 2 + (2 * 5 - 3) * 6);
  CHECK(mc.faces.size() == 2 * (6 + 3 * 2 * 6));

  std::ostringstream out;
  mesh::write_off(m, out);
  std::istringstream in(out.str());
  std::string magic;
  std::getline(in, magic);
  CHECK(magic == "OFF");
  std::size_t nv = 0, nf = 0, ne = 9;
  in >> nv >> nf >> ne;
  CHECK(nv == m.vertices.size());
  CHECK(nf == m.faces.size());
  CHECK(ne == 0);

  CHECK_THROWS_AS((void)mesh::revolve_profile(entire, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)mesh::revolve_profile(parabolic::minimal_profile(3, 2, 1.0, 8), 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(mesh::write_off_file(m, "/nonexistent/dir/m.off"), std::ios_base::failure);
}

TEST_CASE("C API scalar queries and status codes") {
  CHECK(hrs_abi_version() == 1);
  CHECK(std::string(hrs_status_name(HRS_OK)) == "ok");

  double thr = 0.0;
  REQUIRE(hrs_threshold(3, 2, &thr) == HRS_OK);
  CHECK(thr == doctest::Approx(1.0 / 3.0));
  CHECK(hrs_threshold(1, 1, &thr) == HRS_INVALID_ARGUMENT);
  CHECK(std::string(hrs_last_error()).find("n >= 2") != std::string::npos);
  CHECK(hrs_threshold(3, 2, nullptr) == HRS_INVALID_ARGUMENT);

  int compact = -1;
  REQUIRE(hrs_classify(3, 2, 0.2, &compact) == HRS_OK);
  CHECK(compact == 0);
  REQUIRE(hrs_classify_rational(3, 2, 34, 100, &compact) == HRS_OK);
  CHECK(compact == 1);
  CHECK(std::string(hrs_classification_name(1)) == "CompactSphere");

  double val = 0.0;
  REQUIRE(hrs_rotational_integral(2, 2, 1.0, &val) == HRS_OK);
  CHECK(val == doctest::Approx(std::log(std::cosh(1.0))).epsilon(1e-12));
  CHECK(hrs_rotational_integral(3, 2, 701.0, &val) == HRS_NUMERIC);
  CHECK(hrs_rotational_integral(3, 2, -1.0, &val) == HRS_DOMAIN);

  double p = 0.0, q = 0.0;
  REQUIRE(hrs_pq(3, 2, 0.4, 0.0, 1.0, &p, &q) == HRS_OK);
  CHECK(q > 0.0);

  double root = 0.0;
  REQUIRE(hrs_rho0(2, 2, 1.0, &root) == HRS_OK);
  CHECK(root == doctest::Approx(std::acosh(std::exp(0.5))).epsilon(1e-10));
  CHECK(hrs_rho0(3, 2, 0.2, &root) == HRS_INVALID_ARGUMENT);  // entire: logic error

  double lam = 0.0, dlam = 0.0, ddlam = 0.0;
  REQUIRE(hrs_lambda(3, 2, 0.25, 1.0, &lam) == HRS_OK);
  REQUIRE(hrs_dlambda(3, 2, 0.25, 1.0, &dlam) == HRS_OK);
  REQUIRE(hrs_ddlambda(3, 2, 0.25, 1.0, &ddlam) == HRS_OK);
  CHECK(lam == doctest::Approx(rotational::lambda_at({3, 2, 0.25, 0.0}, 1.0)));
  CHECK(hrs_lambda(2, 2, 1.0, 50.0, &lam) == HRS_DOMAIN);  // past the closing radius

  double bound = 0.0;
  REQUIRE(hrs_height_bound(3, 2, 1.0, &bound) == HRS_OK);
  CHECK(bound > 0.0);
  CHECK(hrs_height_bound(2, 2, 1.0, &bound) == HRS_INVALID_ARGUMENT);

  double slope = 0.0;
  REQUIRE(hrs_entire_log_slope(3, 0.1, &slope) == HRS_OK);
  CHECK(slope == doctest::Approx(std::sqrt(0.3 / 0.7)).epsilon(1e-12));
  CHECK(hrs_entire_log_slope(3, 0.5, &slope) == HRS_DOMAIN);
}

TEST_CASE("C API profile lifecycle") {
  hrs_profile* p = nullptr;
  REQUIRE(hrs_profile_rotational(2, 2, 1.0, 16, 0.0, &p) == HRS_OK);
  REQUIRE(p != nullptr);
  CHECK(hrs_profile_rows(p) == 17);
  CHECK(std::string(hrs_profile_family(p)) == "rotational-compact");

  int n = 0, r = 0, is_hr = 0, singular = 0, truncated = 0;
  double target = 0.0, da = 0.0, db = 0.0;
  REQUIRE(hrs_profile_meta(p, &n, &r, &target, &is_hr, &da, &db, &singular, &truncated) ==
          HRS_OK);
  CHECK(n == 2);
  CHECK(r == 2);
  CHECK(target == 1.0);
  CHECK(is_hr == 1);
  CHECK(singular == 1);
  CHECK(truncated == 0);
  CHECK(db == doctest::Approx(std::acosh(std::exp(0.5))).epsilon(1e-10));
  REQUIRE(hrs_profile_meta(p, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                           nullptr) == HRS_OK);  // all outputs optional

  double param = 0.0, lam = 0.0, dlam = 0.0, ddlam = 0.0;
  REQUIRE(hrs_profile_row(p, 0, &param, &lam, &dlam, &ddlam) == HRS_OK);
  CHECK(param == 0.0);
  CHECK(ddlam == doctest::Approx(1.0));
  CHECK(hrs_profile_row(p, 17, &param, &lam, &dlam, &ddlam) == HRS_INVALID_ARGUMENT);

  double max_abs = 1.0, rms = 1.0;
  REQUIRE(hrs_profile_verify(p, &max_abs, &rms) == HRS_OK);
  CHECK(max_abs < 1e-8);
  CHECK(rms <= max_abs);

  double t0 = 0.0;
  REQUIRE(hrs_profile_gluing_height(p, &t0) == HRS_OK);
  REQUIRE(hrs_profile_row(p, 16, &param, &lam, &dlam, &ddlam) == HRS_OK);
  CHECK(t0 == lam);

  const FileGuard fcsv(tmp_path("capi.csv"));
  REQUIRE(hrs_profile_write(p, fcsv.p.string().c_str()) == HRS_OK);
  hrs_profile* back = nullptr;
  REQUIRE(hrs_profile_read(fcsv.p.string().c_str(), &back) == HRS_OK);
  CHECK(hrs_profile_rows(back) == 17);
  hrs_profile_free(back);

  const FileGuard foff(tmp_path("capi.off"));
  REQUIRE(hrs_profile_write_mesh(p, foff.p.string().c_str(), 8, 1) == HRS_OK);
  std::ifstream off(foff.p);
  std::string magic;
  std::getline(off, magic);
  CHECK(magic == "OFF");

  const FileGuard fpath(tmp_path("capi_path.csv"));
  REQUIRE(hrs_profile_write_closed_path(p, fpath.p.string().c_str()) == HRS_OK);
  std::ifstream path_in(fpath.p);
  std::getline(path_in, magic);
  CHECK(magic == "# hrsurf closed-path");

  hrs_profile_free(p);
  hrs_profile_free(nullptr);  // harmless

  // null handles and argument errors are reported, not crashed on
  CHECK(hrs_profile_rows(nullptr) == 0);
  CHECK(hrs_profile_verify(nullptr, &max_abs, &rms) == HRS_INVALID_ARGUMENT);
  CHECK(hrs_profile_rotational(1, 1, 1.0, 16, 0.0, &p) == HRS_INVALID_ARGUMENT);
  CHECK(hrs_profile_read("/nonexistent/file.csv", &back) == HRS_IO);

  // entire profiles refuse compact-only operations
  hrs_profile* ent = nullptr;
  REQUIRE(hrs_profile_rotational(3, 2, 0.2, 8, 3.0, &ent) == HRS_OK);
  CHECK(hrs_profile_gluing_height(ent, &t0) == HRS_INVALID_ARGUMENT);
  CHECK(hrs_profile_write_closed_path(ent, fpath.p.string().c_str()) ==
        HRS_INVALID_ARGUMENT);
  hrs_profile_free(ent);
}

TEST_CASE("C API other profile families") {
  hrs_profile* p = nullptr;
  REQUIRE(hrs_profile_parabolic_minimal(3, 2, 1.0, 24, &p) == HRS_OK);
  CHECK(std::string(hrs_profile_family(p)) == "parabolic-minimal");
  double max_abs = 1.0, rms = 1.0;
  REQUIRE(hrs_profile_verify(p, &max_abs, &rms) == HRS_OK);
  CHECK(max_abs < 1e-8);
  hrs_profile_free(p);

  REQUIRE(hrs_profile_screw_flat(1.2, 0.8, 24, &p) == HRS_OK);
  CHECK(std::string(hrs_profile_family(p)) == "screw-flat");
  hrs_profile_free(p);

  REQUIRE(hrs_profile_screw_ode(3, 0.0, 0.0, 0.5, 0, 0.0, 0.5, 2.0, 64, &p) == HRS_OK);
  CHECK(std::string(hrs_profile_family(p)) == "screw-ode");
  CHECK(hrs_profile_rows(p) == 65);
  hrs_profile_free(p);

  // domain exhaustion surfaces as a domain error
  CHECK(hrs_profile_screw_ode(3, 0.0, 0.0, 0.5, 0, 0.0, 0.5, 5.0, 64, &p) == HRS_DOMAIN);
}

TEST_CASE("C API samples and divergence residual") {
  const ambient::AmbientSpec spec{2, ambient::Model::HalfSpace};
  const GraphSample s = GraphSample::from_function(
      spec, {0.1, 0.5}, {0.05, 0.05}, {12, 12},
      [](const Vec& p) { return 0.3 * std::sin(p[0]) + 0.2 * p[1] * p[1]; });
  const FileGuard f(tmp_path("capi_sample.csv"));
  write_sample(s, f.p.string());

  hrs_sample* h = nullptr;
  REQUIRE(hrs_sample_read(f.p.string().c_str(), &h) == HRS_OK);
  double max_abs = 0.0, rms = 0.0;
  REQUIRE(hrs_divergence_residual(h, 1, &max_abs, &rms) == HRS_OK);
  CHECK(max_abs > 0.0);
  CHECK(rms <= max_abs);
  CHECK(hrs_divergence_residual(h, 2, &max_abs, &rms) == HRS_INVALID_ARGUMENT);
  hrs_sample_free(h);
  CHECK(hrs_sample_read("/nope.csv", &h) == HRS_IO);
}

TEST_CASE("format helper") {
  char buf[32];
  REQUIRE(hrs_format_double(0.1, buf, sizeof buf) > 0);
  CHECK(std::string(buf) == "0.1");
  REQUIRE(hrs_format_double(1.0 / 3.0, buf, sizeof buf) > 0);
  CHECK(std::stod(buf) == 1.0 / 3.0);  // shortest round trip
  CHECK(hrs_format_double(1.0 / 3.0, buf, 4) == -1);
}
