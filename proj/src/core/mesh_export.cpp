#include "core/mesh_export.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "core/serialize.hpp"

namespace hrsurf::mesh {

namespace {

// a row becomes either a ring of `segments` vertices or a single apex
struct RowHandle {
  bool apex = false;
  int base = 0;
};

class Builder {
 public:
  explicit Builder(int segments) : m_(segments) {
    if (segments < 3) throw std::invalid_argument("mesh: need segments >= 3");
  }

  RowHandle add_row(double radius, double t) {
    RowHandle h;
    h.base = static_cast<int>(mesh_.vertices.size());
    if (radius == 0.0) {
      h.apex = true;
      mesh_.vertices.push_back({0.0, 0.0, t});
      return h;
    }
    for (int k = 0; k < m_; ++k) {
      const double th = 2.0 * std::numbers::pi * k / m_;
      mesh_.vertices.push_back({radius * std::cos(th), radius * std::sin(th), t});
    }
    return h;
  }

  void connect(const RowHandle& a, const RowHandle& b, bool flip) {
    if (a.apex && b.apex) throw std::invalid_argument("mesh: two consecutive apex rows");
    for (int k = 0; k < m_; ++k) {
      const int k1 = (k + 1) % m_;
      if (a.apex) {
        push({a.base, b.base + k, b.base + k1}, flip);
      } else if (b.apex) {
        push({a.base + k, a.base + k1, b.base}, flip);
      } else {
        push({a.base + k, b.base + k, b.base + k1}, flip);
        push({a.base + k, b.base + k1, a.base + k1}, flip);
      }
    }
  }

  TriMesh take() { return std::move(mesh_); }

 private:
  void push(std::array<int, 3> f, bool flip) {
    if (flip) std::swap(f[1], f[2]);
    mesh_.faces.push_back(f);
  }

  TriMesh mesh_;
  int m_;
};

double ring_radius(double rho) { return std::tanh(0.5 * rho); }

void require_rotational(const ProfileCurve& curve) {
  if (curve.family != ProfileFamily::RotationalEntire &&
      curve.family != ProfileFamily::RotationalCompact)
    throw std::invalid_argument("mesh: revolution export needs a rotational profile");
  curve.validate();
}

}  // namespace

TriMesh revolve_profile(const ProfileCurve& curve, int segments) {
  require_rotational(curve);
  Builder b(segments);
  RowHandle prev;
  bool have_prev = false;
  for (const ProfileRow& row : curve.rows) {
    const RowHandle h = b.add_row(ring_radius(row.param), row.lambda);
    if (have_prev) b.connect(prev, h, false);
    prev = h;
    have_prev = true;
  }
  return b.take();
}

TriMesh revolve_closed(const rotational::ClosedProfile& closed, int segments) {
  require_rotational(closed.upper);
  if (closed.upper.family != ProfileFamily::RotationalCompact)
    throw std::invalid_argument("mesh: closed export needs a compact profile");
  Builder b(segments);
  RowHandle prev;
  bool have_prev = false;
  for (const ProfileRow& row : closed.upper.rows) {
    const RowHandle h = b.add_row(ring_radius(row.param), row.lambda);
    if (have_prev) b.connect(prev, h, false);
    prev = h;
    have_prev = true;
  }
  // reflected half reuses the equator ring; winding flipped to keep the
  // surface consistently oriented
  const auto& rows = closed.upper.rows;
  for (std::size_t i = rows.size() - 1; i-- > 0;) {
    const RowHandle h =
        b.add_row(ring_radius(rows[i].param), 2.0 * closed.t0 - rows[i].lambda);
    b.connect(prev, h, true);
    prev = h;
  }
  return b.take();
}

void write_off(const TriMesh& mesh, std::ostream& out) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const auto& v : mesh.vertices)
    out << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2])
        << '\n';
  for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_off_file(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
  write_off(mesh, out);
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace hrsurf::mesh
