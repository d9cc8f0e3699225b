// hrsurf command-line front end: construct, classify, verify, bound, export.
// Talks to the library through the public C interface only.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hrsurf/hrsurf.h"

namespace {

std::string fmt(double x) {
  char buf[64];
  if (hrs_format_double(x, buf, sizeof buf) < 0) return "?";
  return buf;
}

// spec'd process exit codes: 2 bad arguments, 3 domain, 4 numerical failure
int exit_code(int status) {
  switch (status) {
    case HRS_INVALID_ARGUMENT: return 2;
    case HRS_DOMAIN: return 3;
    case HRS_NUMERIC: return 4;
    default: return 1;
  }
}

int die(int status) {
  std::cerr << "error [" << hrs_status_name(status) << "]: " << hrs_last_error() << "\n";
  return exit_code(status);
}

int die_usage(const std::string& message) {
  std::cerr << "error [invalid-argument]: " << message << "\n";
  return 2;
}

bool parse_ll(const std::string& s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_real(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

struct ProfileGuard {
  hrs_profile* p = nullptr;
  ~ProfileGuard() { hrs_profile_free(p); }
};

struct SampleGuard {
  hrs_sample* s = nullptr;
  ~SampleGuard() { hrs_sample_free(s); }
};

int run_classify(int n, int r, const std::string& h_text) {
  int compact = 0;
  int rc;
  const std::size_t slash = h_text.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    if (!parse_ll(h_text.substr(0, slash), num) || !parse_ll(h_text.substr(slash + 1), den))
      return die_usage("H must be a real number or a fraction like 1/3");
    rc = hrs_classify_rational(n, r, num, den, &compact);
  } else {
    double h = 0.0;
    if (!parse_real(h_text, h))
      return die_usage("H must be a real number or a fraction like 1/3");
    rc = hrs_classify(n, r, h, &compact);
  }
  if (rc != HRS_OK) return die(rc);
  double thr = 0.0;
  if (int trc = hrs_threshold(n, r, &thr); trc != HRS_OK) return die(trc);
  std::cout << hrs_classification_name(compact) << "\n";
  std::cout << "threshold (n-r)/n = " << fmt(thr) << "\n";
  return 0;
}

// format policy: explicit --format wins, otherwise the file extension
// (.json -> json, .off -> mesh, anything else csv)
bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int write_profile_as(hrs_profile* p, const std::string& out_path, std::string format,
                     int segments, bool closed) {
  if (format.empty()) {
    if (ends_with(out_path, ".json"))
      format = "json";
    else if (ends_with(out_path, ".off"))
      format = "mesh";
    else
      format = "csv";
  }
  int rc;
  if (format == "mesh") {
    rc = hrs_profile_write_mesh(p, out_path.c_str(), segments, closed ? 1 : 0);
  } else if (format == "json") {
    if (!ends_with(out_path, ".json"))
      return die_usage("json format needs a .json output path");
    rc = hrs_profile_write(p, out_path.c_str());
  } else if (format == "csv") {
    if (ends_with(out_path, ".json"))
      return die_usage("csv format clashes with a .json output path");
    rc = hrs_profile_write(p, out_path.c_str());
  } else {
    return die_usage("format must be csv, json or mesh");
  }
  if (rc != HRS_OK) return die(rc);
  return 0;
}

int run_verify(const std::string& path) {
  ProfileGuard g;
  if (int rc = hrs_profile_read(path.c_str(), &g.p); rc != HRS_OK) return die(rc);
  double max_abs = 0.0, rms = 0.0;
  if (int rc = hrs_profile_verify(g.p, &max_abs, &rms); rc != HRS_OK) return die(rc);
  std::cout << "family " << hrs_profile_family(g.p) << "\n";
  std::cout << "rows " << hrs_profile_rows(g.p) << "\n";
  std::cout << "max-abs-residual " << fmt(max_abs) << "\n";
  std::cout << "rms-residual " << fmt(rms) << "\n";
  const double tol = 1e-7;
  if (!(max_abs < tol)) {
    std::cout << "status fail\n";
    std::cerr << "error [numeric]: residual tolerance " << fmt(tol) << " exceeded\n";
    return 4;
  }
  std::cout << "status pass\n";
  return 0;
}

int run_residual(const std::vector<std::string>& files, int r) {
  std::vector<double> rms_all;
  for (const std::string& path : files) {
    SampleGuard g;
    if (int rc = hrs_sample_read(path.c_str(), &g.s); rc != HRS_OK) return die(rc);
    double max_abs = 0.0, rms = 0.0;
    if (int rc = hrs_divergence_residual(g.s, r, &max_abs, &rms); rc != HRS_OK)
      return die(rc);
    std::cout << path << " max-abs " << fmt(max_abs) << " rms " << fmt(rms) << "\n";
    rms_all.push_back(rms);
  }
  for (std::size_t i = 0; i + 1 < rms_all.size(); ++i){
    const double slope = std::log2(rms_all[i] / rms_all[i + 1]);
    std::cout << "slope[" << i << "->" << i + 1 << "] " << fmt(slope) << "\n";
  }
  return 0;
}

int run_bound(int n, int r, double radius, const std::string& out_path) {
  double height = 0.0, gradient = 0.0;
  if (int rc = hrs_height_bound(n, r, radius, &height); rc != HRS_OK) return die(rc);
  if (int rc = hrs_gradient_bound(n, r, radius, &gradient); rc != HRS_OK) return die(rc);
  std::string json = "{\"schema\": 1, \"n\": " + std::to_string(n) +
                     ", \"r\": " + std::to_string(r) + ", \"R\": " + fmt(radius) +
                     ", \"height_bound\": " + fmt(height) +
                     ", \"gradient_bound\": " + fmt(gradient) + "}";
  if (out_path.empty()) {
    std::cout << json << "\n";
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error [io]: cannot open for writing: " << out_path << "\n";
    return 1;
  }
  out << json << "\n";
  if (!out) {
    std::cerr << "error [io]: write failed: " << out_path << "\n";
    return 1;
  }
  return 0;
}

int run_figures(const std::string& outdir) {
  struct Entry {
    const char* name;
    int n;
    double hr;
  };
  // the two entire-graph sweeps
  const Entry entire[] = {
      {"fig1_n3_h1over3.csv", 3, 1.0 / 3.0},
      {"fig1_n3_h1over5.csv", 3, 0.2},
      {"fig2_n4_h1over2.csv", 4, 0.5},
      {"fig2_n4_h1over3.csv", 4, 1.0 / 3.0},
  };
  for (const Entry& e : entire) {
    ProfileGuard g;
    if (int rc = hrs_profile_rotational(e.n, 2, e.hr, 512, 5.0, &g.p); rc != HRS_OK)
      return die(rc);
    const std::string path = outdir + "/" + e.name;
    if (int rc = hrs_profile_write(g.p, path.c_str()); rc != HRS_OK) return die(rc);
    std::cout << "wrote " << path << "\n";
  }
  // the compact example: upper half plus the doubled closed curve
  ProfileGuard g;
  if (int rc = hrs_profile_rotational(4, 2, 1.0, 512, 0.0, &g.p); rc != HRS_OK)
    return die(rc);
  const std::string upper = outdir + "/fig3_n4_h1_upper.csv";
  if (int rc = hrs_profile_write(g.p, upper.c_str()); rc != HRS_OK) return die(rc);
  std::cout << "wrote " << upper << "\n";
  const std::string closed = outdir + "/fig3_n4_h1_closed.csv";
  if (int rc = hrs_profile_write_closed_path(g.p, closed.c_str()); rc != HRS_OK)
    return die(rc);
  std::cout << "wrote " << closed << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant r-mean-curvature graphs over hyperbolic space: "
               "profiles, classification, verification, barrier bounds"};
  app.require_subcommand(1);

  // classify
  int cl_n = 0, cl_r = 0;
  std::string cl_h;
  CLI::App* classify = app.add_subcommand("classify", "entire graph or compact sphere?");
  classify->add_option("n", cl_n, "ambient dimension (hyperbolic factor)")->required();
  classify->add_option("r", cl_r, "curvature order")->required();
  classify->add_option("H", cl_h, "target H_r, decimal or fraction (exact)")->required();

  // profile family subcommands
  CLI::App* profile = app.add_subcommand("profile", "construct and write a profile table");
  profile->require_subcommand(1);
  std::string out_path, format;
  int samples = 512, segments = 64;
  bool closed = false;
  auto add_output_opts = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file")->required();
    sub->add_option("--format", format, "csv|json|mesh (default: by extension)");
    sub->add_option("--samples", samples, "table rows (default 512)");
    sub->add_option("--segments", segments, "mesh rings around the axis (default 64)");
    sub->add_flag("--closed", closed, "mesh: double a compact profile across its equator");
  };

  int rot_n = 0, rot_r = 0;
  double rot_h = 0.0, rho_max = 30.0;
  CLI::App* rot = profile->add_subcommand("rotational", "rotationally invariant, constant H_r");
  rot->add_option("n", rot_n)->required();
  rot->add_option("r", rot_r)->required();
  rot->add_option("H", rot_h, "target H_r > 0")->required();
  rot->add_option("--rho-max", rho_max, "truncation radius for entire graphs (default 30)");
  add_output_opts(rot);

  int pm_n = 0, pm_r = 0;
  double pm_c = 0.0;
  CLI::App* pmin = profile->add_subcommand("parabolic-minimal",
                                           "translation invariant, S_r = 0 closed form");
  pmin->add_option("n", pm_n)->required();
  pmin->add_option("r", pm_r)->required();
  pmin->add_option("c", pm_c, "family constant > 0")->required();
  add_output_opts(pmin);

  double sf_c = 0.0, sf_l = 0.0;
  CLI::App* sflat = profile->add_subcommand("screw-flat",
                                            "n = 2 screw family with S_2 = 0, closed form");
  sflat->add_option("c", sf_c, "family constant > 0")->required();
  sflat->add_option("l", sf_l, "pitch > 0")->required();
  add_output_opts(sflat);

  int so_n = 0, so_steps = 1024;
  double so_s2 = 0.0, so_l = 0.0, so_d = 0.0, so_y0 = 0.0, so_y1 = 0.0, so_psi0 = 0.0;
  bool so_has_psi0 = false;
  CLI::App* sode = profile->add_subcommand("screw-ode",
                                           "screw family with constant S_2, RK4 reduction");
  sode->add_option("n", so_n)->required();
  sode->add_option("s2", so_s2, "target S_2")->required();
  sode->add_option("l", so_l, "pitch magnitude")->required();
  sode->add_option("d", so_d, "conserved psi value")->required();
  sode->add_option("y0", so_y0, "left end of the y-range (> 0)")->required();
  sode->add_option("y1", so_y1, "right end of the y-range")->required();
  sode->add_option("--steps", so_steps, "base RK4 steps (default 1024)");
  CLI::Option* psi0_opt = sode->add_option("--psi0", so_psi0, "explicit initial psi");
  add_output_opts(sode);

  // verify
  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "re-derive a profile's declared constant");
  verify->add_option("file", verify_path, "profile file (csv or json)")->required();

  // residual
  std::string res_first;
  int res_r = 0;
  std::vector<std::string> res_more;
  CLI::App* residual = app.add_subcommand(
      "residual", "flux-identity residual of sampled graphs, plus convergence slopes");
  residual->add_option("file", res_first, "graph sample (csv or json)")->required();
  residual->add_option("r", res_r, "flux identity degree (checks (r+1) S_{r+1})")->required();
  residual->add_option("more", res_more, "finer grids for convergence slopes");

  // bound
  int b_n = 0, b_r = 0;
  double b_radius = 0.0;
  std::string b_out;
  CLI::App* bound = app.add_subcommand("bound", "barrier height/gradient constants");
  bound->add_option("n", b_n)->required();
  bound->add_option("r", b_r)->required();
  bound->add_option("R", b_radius, "hyperbolic ball radius > 0")->required();
  bound->add_option("--out", b_out, "write JSON here instead of stdout");

  // figures
  std::string outdir = ".";
  CLI::App* figures = app.add_subcommand("figures", "write the bundled example datasets");
  figures->add_option("--outdir", outdir, "target directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (classify->parsed()) return run_classify(cl_n, cl_r, cl_h);

  if (profile->parsed()) {
    ProfileGuard g;
    int rc;
    if (rot->parsed()) {
      rc = hrs_profile_rotational(rot_n, rot_r, rot_h, samples, rho_max, &g.p);
    } else if (pmin->parsed()) {
      rc = hrs_profile_parabolic_minimal(pm_n, pm_r, pm_c, samples, &g.p);
    } else if (sflat->parsed()) {
      rc = hrs_profile_screw_flat(sf_c, sf_l, samples, &g.p);
    } else {
      so_has_psi0 = psi0_opt->count() > 0;
      rc = hrs_profile_screw_ode(so_n, so_s2, so_l, so_d, so_has_psi0 ? 1 : 0, so_psi0,
                                 so_y0, so_y1, so_steps, &g.p);
    }
    if (rc != HRS_OK) return die(rc);
    if (int wrc = write_profile_as(g.p, out_path, format, segments, closed); wrc != 0)
      return wrc;
    std::cout << "wrote " << out_path << " (" << hrs_profile_rows(g.p) << " rows, "
              << hrs_profile_family(g.p) << ")\n";
    return 0;
  }

  if (verify->parsed()) return run_verify(verify_path);

  if (residual->parsed()) {
    std::vector<std::string> files{res_first};
    files.insert(files.end(), res_more.begin(), res_more.end());
    return run_residual(files, res_r);
  }

  if (bound->parsed()) return run_bound(b_n, b_r, b_radius, b_out);

  if (figures->parsed()) return run_figures(outdir);

  return die_usage("no subcommand given");
}
