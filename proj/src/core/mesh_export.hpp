#pragma once

// Triangulated surfaces of revolution for rotational profiles, embedded in
// ball-model Cartesian coordinates: a row at distance rho from the axis
// becomes a ring of radius s = tanh(rho/2) at height t = lambda(rho).
// Rows at rho = 0 collapse to a single apex vertex.  Closed profiles append
// the reflected lower half (t -> 2 t0 - t), sharing the equator ring.
//
// Output is plain OFF text:
//   OFF
//   <vertices> <faces> 0
//   x y t            (one line per vertex)
//   3 a b c          (one line per triangular face)

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/profile_curve.hpp"
#include "core/rotational.hpp"

namespace hrsurf::mesh {

struct TriMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;
};

// Rotational profiles only; segments >= 3 rings around the axis.
TriMesh revolve_profile(const ProfileCurve& curve, int segments);
TriMesh revolve_closed(const rotational::ClosedProfile& closed, int segments);

void write_off(const TriMesh& mesh, std::ostream& out);
void write_off_file(const TriMesh& mesh, const std::string& path);

}  // namespace hrsurf::mesh
