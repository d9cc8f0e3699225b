#pragma once

// Sampled generating curves lambda(param) of the invariant surfaces, plus the
// file formats the CLI trades in.  Derivative columns hold NaN where the
// curve ends with a vertical tangent (see endpoint_singular).

#include <iosfwd>
#include <string>
#include <vector>

#include "core/smallmat.hpp"

namespace hrsurf {

enum class ProfileFamily {
  RotationalEntire,
  RotationalCompact,
  ParabolicMinimal,
  ScrewFlat,
  ScrewOde,
};

const char* family_name(ProfileFamily f);
ProfileFamily family_from_name(const std::string& name);

struct ProfileRow {
  double param = 0.0;
  double lambda = 0.0;
  double dlambda = 0.0;
  double ddlambda = 0.0;
};

struct ProfileCurve {
  ProfileFamily family = ProfileFamily::RotationalEntire;
  std::string param_name = "rho";  // "rho" for rotational, "y" for parabolic/screw
  int n = 0;
  int r = 0;
  double target = 0.0;       // the constant the family realizes
  bool target_is_hr = true;  // true: target is H_r, false: target is S_r
  double d = 0.0;            // integration constant (rotational first integral / ODE)
  double c = 0.0;            // closed-form family constant, 0 when unused
  Vec l;                     // screw pitch, empty when unused
  double domain_a = 0.0;
  double domain_b = 0.0;
  bool endpoint_singular = false;  // lambda' blows up at a finite domain endpoint
  bool truncated = false;          // table stops before the mathematical domain does
  std::vector<ProfileRow> rows;

  void validate() const;  // params strictly increasing, metadata coherent
};

void write_profile_csv(const ProfileCurve& c, std::ostream& out);
void write_profile_json(const ProfileCurve& c, std::ostream& out);
void write_profile(const ProfileCurve& c, const std::string& path);  // format by extension

ProfileCurve read_profile_csv(std::istream& in);
ProfileCurve read_profile_json(std::istream& in);
ProfileCurve read_profile(const std::string& path);

}  // namespace hrsurf
