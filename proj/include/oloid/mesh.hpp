#ifndef OLOID_MESH_HPP
#define OLOID_MESH_HPP

// Watertight triangulation of the unit oloid boundary, discrete volume/area, and
// Wavefront OBJ input/output.

#include <Eigen/Core>

#include <iosfwd>

namespace oloid {

struct TriMesh
{
  Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor> vertices;
  Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor> triangles;
  // grid resolution the mesh was built from; zero for meshes read from a file
  int n_m = 0;
  int n_t = 0;
};

/// Triangulates both sheets on an (n_m + 1) x (n_t + 1) grid per sheet, welding
/// coincident vertices, with outward winding. The t-direction grid is regular in
/// u, where t = (2pi/3) sin(pi u / 2), u in [-1, 1]; this keeps the square-root
/// behaviour of w3 at |t| = 2pi/3 from limiting the convergence order.
/// Requires n_m >= 1 and n_t >= 2.
TriMesh build_mesh(int n_m, int n_t);

/// Every undirected edge is shared by exactly two triangles.
bool is_closed(const TriMesh& mesh);

/// Every directed edge occurs at most once (neighbouring triangles agree on winding).
bool is_consistently_oriented(const TriMesh& mesh);

/// V - E + F over the referenced vertices.
int euler_characteristic(const TriMesh& mesh);

/// Signed-tetrahedron volume from the origin; throws std::invalid_argument for
/// an open mesh.
double mesh_volume(const TriMesh& mesh);

double mesh_area(const TriMesh& mesh);

/// ASCII OBJ: `v x y z` lines (17 significant digits) followed by 1-based `f i j k`.
void export_obj(const TriMesh& mesh, std::ostream& out);

/// Reads `v` and `f` records (triangles only); other records are ignored.
TriMesh parse_obj(std::istream& in);

} // namespace oloid

#endif // OLOID_MESH_HPP
