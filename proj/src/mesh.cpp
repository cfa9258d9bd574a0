#include "oloid/mesh.hpp"

#include "oloid/surface.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oloid {

namespace {

using Key = std::array<double, 3>;

// Grid vertex with exact values on the welded seams: w3 = 0 at m = 0 and at
// |t| = 2pi/3, and mirror-image parameters give bitwise mirror-image points.
Key grid_vertex(int i, int j, int n_m, int n_t, Sheet sheet)
{
  const double m = i == n_m ? 1.0 : static_cast<double>(i) / n_m;
  const int twice = 2 * j - n_t; // u = twice / n_t
  const double sign = twice < 0 ? -1.0 : 1.0;
  Key p;
  if (j == 0 || j == n_t) {
    p = {sign * (1 - m) * (std::numbers::sqrt3 / 2), 1.5 * m, 0.0};
  } else {
    const double u = static_cast<double>(std::abs(twice)) / n_t;
    const double t = parameter_t_max<double> * std::sin(std::numbers::pi / 2 * u);
    const Vector3 q = surface_point(m, t, sheet);
    p = {sign * q.x(), q.y(), q.z()};
  }
  for (double& c : p)
    c += 0.0; // -0 -> +0
  return p;
}

} // namespace

TriMesh build_mesh(int n_m, int n_t)
{
  if (n_m < 1 || n_t < 2)
    throw std::invalid_argument("build_mesh: requires n_m >= 1 and n_t >= 2");

  std::map<Key, int> index_of;
  std::vector<Key> points;
  auto vertex_index = [&](int i, int j, Sheet sheet) {
    const Key p = grid_vertex(i, j, n_m, n_t, sheet);
    auto [it, inserted] = index_of.emplace(p, static_cast<int>(points.size()));
    if (inserted)
      points.push_back(p);
    return it->second;
  };

  std::vector<std::array<int, 3>> tris;
  auto add = [&](int a, int b, int c) {
    if (a != b && b != c && a != c)
      tris.push_back({a, b, c});
  };

  for (Sheet sheet : {Sheet::upper, Sheet::lower}) {
    for (int i = 0; i < n_m; ++i) {
      for (int j = 0; j < n_t; ++j) {
        const int p00 = vertex_index(i, j, sheet);
        const int p10 = vertex_index(i + 1, j, sheet);
        const int p01 = vertex_index(i, j + 1, sheet);
        const int p11 = vertex_index(i + 1, j + 1, sheet);
        // outward normal is w_t x w_m on the upper sheet; mirrored below.
        // Cells are split along the diagonal of increasing m + t, except the
        // cell at m = 0, t = 2pi/3: there p00, p01 and p11 all lie on welded
        // seams and that triangle would appear on both sheets.
        const bool flip = i == 0 && j == n_t - 1;
        if (sheet == Sheet::upper) {
          if (flip) {
            add(p00, p01, p10);
            add(p01, p11, p10);
          } else {
            add(p00, p01, p11);
            add(p00, p11, p10);
          }
        } else {
          if (flip) {
            add(p00, p10, p01);
            add(p01, p10, p11);
          } else {
            add(p00, p11, p01);
            add(p00, p10, p11);
          }
        }
      }
    }
  }

  TriMesh mesh;
  mesh.n_m = n_m;
  mesh.n_t = n_t;
  mesh.vertices.resize(static_cast<Eigen::Index>(points.size()), 3);
  for (std::size_t k = 0; k < points.size(); ++k)
    mesh.vertices.row(static_cast<Eigen::Index>(k)) << points[k][0], points[k][1], points[k][2];
  mesh.triangles.resize(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t k = 0; k < tris.size(); ++k)
    mesh.triangles.row(static_cast<Eigen::Index>(k)) << tris[k][0], tris[k][1], tris[k][2];
  return mesh;
}

namespace {

std::map<std::pair<int, int>, int> edge_counts(const TriMesh& mesh, bool directed)
{
  std::map<std::pair<int, int>, int> counts;
  for (Eigen::Index f = 0; f < mesh.triangles.rows(); ++f) {
    for (int e = 0; e < 3; ++e) {
      int a = mesh.triangles(f, e);
      int b = mesh.triangles(f, (e + 1) % 3);
      if (!directed && a > b)
        std::swap(a, b);
      ++counts[{a, b}];
    }
  }
  return counts;
}

} // namespace

bool is_closed(const TriMesh& mesh)
{
  if (mesh.triangles.rows() == 0)
    return false;
  for (const auto& [edge, count] : edge_counts(mesh, false))
    if (count != 2)
      return false;
  return true;
}

bool is_consistently_oriented(const TriMesh& mesh)
{
  for (const auto& [edge, count] : edge_counts(mesh, true))
    if (count != 1)
      return false;
  return true;
}

int euler_characteristic(const TriMesh& mesh)
{
  std::vector<bool> used(static_cast<std::size_t>(mesh.vertices.rows()), false);
  for (Eigen::Index f = 0; f < mesh.triangles.rows(); ++f)
    for (int e = 0; e < 3; ++e)
      used[static_cast<std::size_t>(mesh.triangles(f, e))] = true;
  int v = 0;
  for (bool u : used)
    v += u ? 1 : 0;
  const int e = static_cast<int>(edge_counts(mesh, false).size());
  const int f = static_cast<int>(mesh.triangles.rows());
  return v - e + f;
}

double mesh_volume(const TriMesh& mesh)
{
  if (!is_closed(mesh))
    throw std::invalid_argument("mesh_volume: mesh is not closed");
  double six_volume = 0;
  for (Eigen::Index f = 0; f < mesh.triangles.rows(); ++f) {
    const Vector3 a = mesh.vertices.row(mesh.triangles(f, 0)).transpose();
    const Vector3 b = mesh.vertices.row(mesh.triangles(f, 1)).transpose();
    const Vector3 c = mesh.vertices.row(mesh.triangles(f, 2)).transpose();
    six_volume += a.dot(b.cross(c));
  }
  return six_volume / 6;
}

double mesh_area(const TriMesh& mesh)
{
  double twice_area = 0;
  for (Eigen::Index f = 0; f < mesh.triangles.rows(); ++f) {
    const Vector3 a = mesh.vertices.row(mesh.triangles(f, 0)).transpose();
    const Vector3 b = mesh.vertices.row(mesh.triangles(f, 1)).transpose();
    const Vector3 c = mesh.vertices.row(mesh.triangles(f, 2)).transpose();
    twice_area += (b - a).cross(c - a).norm();
  }
  return twice_area / 2;
}

void export_obj(const TriMesh& mesh, std::ostream& out)
{
  char line[128];
  for (Eigen::Index v = 0; v < mesh.vertices.rows(); ++v) {
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", mesh.vertices(v, 0), mesh.vertices(v, 1),
                  mesh.vertices(v, 2));
    out << line;
  }
  for (Eigen::Index f = 0; f < mesh.triangles.rows(); ++f) {
    std::snprintf(line, sizeof line, "f %d %d %d\n", mesh.triangles(f, 0) + 1, mesh.triangles(f, 1) + 1,
                  mesh.triangles(f, 2) + 1);
    out << line;
  }
}

TriMesh parse_obj(std::istream& in)
{
  std::vector<std::array<double, 3>> verts;
  std::vector<std::array<int, 3>> faces;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "v") {
      std::array<double, 3> p{};
      if (!(fields >> p[0] >> p[1] >> p[2]))
        throw std::runtime_error("parse_obj: malformed vertex: " + line);
      verts.push_back(p);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      for (int& idx : f) {
        std::string token;
        if (!(fields >> token))
          throw std::runtime_error("parse_obj: face with fewer than 3 vertices: " + line);
        idx = std::stoi(token.substr(0, token.find('/'))) - 1;
      }
      faces.push_back(f);
    }
  }
  TriMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(verts.size()), 3);
  for (std::size_t k = 0; k < verts.size(); ++k)
    mesh.vertices.row(static_cast<Eigen::Index>(k)) << verts[k][0], verts[k][1], verts[k][2];
  mesh.triangles.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    for (int idx : faces[k])
      if (idx < 0 || idx >= static_cast<int>(verts.size()))
        throw std::runtime_error("parse_obj: face index out of range");
    mesh.triangles.row(static_cast<Eigen::Index>(k)) << faces[k][0], faces[k][1], faces[k][2];
  }
  return mesh;
}

} // namespace oloid
