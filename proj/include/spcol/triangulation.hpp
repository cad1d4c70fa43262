#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spcol {

using Vec2 = Eigen::Vector2d;

/// Raised for unreadable, unparsable, or non-conforming mesh input.
class MeshError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Barycentric tolerance for point-in-triangle acceptance.
inline constexpr double kLocateTol = 1e-12;

struct Edge {
  int a = -1, b = -1;      // endpoint vertex ids, a < b
  int tri[2] = {-1, -1};   // incident triangles; tri[1] < 0 on the boundary
  int local[2] = {-1, -1}; // local edge index inside each triangle (edge e is
                           // opposite local vertex e)
  bool interior() const { return tri[1] >= 0; }
};

struct LocateResult {
  int triangle = -1;
  Eigen::Vector3d bary = Eigen::Vector3d::Zero();
};

// Conforming triangulation of a polygonal domain (holes allowed). Immutable
// after construction; all queries are safe to call concurrently.
class Triangulation {
public:
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles; // counterclockwise
  std::vector<Edge> edges;                   // deterministic construction order
  std::vector<int> interior_edges;           // indices into `edges`
  std::vector<int> boundary_edges;
  std::vector<bool> boundary_vertex;
  std::vector<int> vertex_owner; // smallest triangle id touching the vertex
  double h = 0.0;                // longest edge length
  double shape_constant = 0.0;   // max over T of |T| / rho_T

  int nv() const { return static_cast<int>(vertices.size()); }
  int nt() const { return static_cast<int>(triangles.size()); }

  std::array<Vec2, 3> corners(int t) const {
    const auto& tri = triangles.at(static_cast<size_t>(t));
    return {vertices[static_cast<size_t>(tri[0])], vertices[static_cast<size_t>(tri[1])],
            vertices[static_cast<size_t>(tri[2])]};
  }

  double signed_area(int t) const;
  double total_area() const;

  // Validates vertex/triangle data, fixes clockwise triangles, builds edge
  // adjacency and mesh statistics. Throws MeshError on any violation.
  static Triangulation build(std::vector<Vec2> vertices,
                             std::vector<std::array<int, 3>> triangles);
};

// Mesh file format (ASCII, '#' comments):
//   nv nt base
//   x y          (nv lines)
//   i j k        (nt lines, indices in the declared base)
Triangulation load_mesh(const std::string& path);
Triangulation parse_mesh(std::istream& in, const std::string& origin = "<stream>");

// 1-to-4 split of every triangle at edge midpoints; midpoints are shared
// across edges. The result has 4*nt triangles and h equal to half the input h.
Triangulation uniform_refine(const Triangulation& tri);

// n x n grid over [lo.x,hi.x] x [lo.y,hi.y], each cell split by the
// bottom-left-to-top-right diagonal: 2n^2 triangles, (n+1)^2 vertices.
Triangulation generate_square_mesh(int n, Vec2 lo = Vec2(0.0, 0.0),
                                   Vec2 hi = Vec2(1.0, 1.0));

// Brute-force point location: scans triangles in index order and returns the
// first whose barycentric coordinates are all >= -kLocateTol, so ties on
// shared edges resolve to the smallest triangle index.
std::optional<LocateResult> locate_point(const Triangulation& tri, const Vec2& p);

// Grid-bucketed accelerator. Candidate triangles are tested in index order
// with the same predicate as locate_point, so results agree exactly.
class PointLocator {
public:
  explicit PointLocator(const Triangulation& tri);
  std::optional<LocateResult> locate(const Vec2& p) const;
  const Triangulation& mesh() const { return *tri_; }

private:
  const Triangulation* tri_;
  Vec2 lo_, cell_;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<int>> buckets_; // triangle ids, ascending
};

} // namespace spcol
