#include "spcol/smoothness.hpp"

namespace spcol {

namespace {

struct EdgeFrame {
  int tri_T = -1, tri_Tt = -1; // smaller / larger triangle index
  int rot_T = 0, rot_Tt = 0;   // rotation offsets of the canonical relabeling
  Eigen::Vector3d b_v4;        // barycentric of v4 w.r.t. relabeled T
};

// Rotating a ccw triangle so its local vertex `rot` comes first puts the
// shared edge into positions (2,3); the two triangles traverse it in
// opposite directions, which yields exactly <v1,v2,v3> and <v4,v3,v2>.
EdgeFrame edge_frame(const Triangulation& mesh, const Edge& ed) {
  EdgeFrame f;
  const int side_T = ed.tri[0] < ed.tri[1] ? 0 : 1;
  f.tri_T = ed.tri[side_T];
  f.tri_Tt = ed.tri[1 - side_T];
  f.rot_T = ed.local[side_T];
  f.rot_Tt = ed.local[1 - side_T];

  const auto& T = mesh.triangles[static_cast<size_t>(f.tri_T)];
  const auto& Tt = mesh.triangles[static_cast<size_t>(f.tri_Tt)];
  auto vat = [&](const std::array<int, 3>& tri, int rot, int pos) {
    return mesh.vertices[static_cast<size_t>(tri[(rot + pos) % 3])];
  };
  const TriFrame frame(vat(T, f.rot_T, 0), vat(T, f.rot_T, 1), vat(T, f.rot_T, 2));
  f.b_v4 = frame.barycentric(vat(Tt, f.rot_Tt, 0));
  return f;
}

// Global column of the coefficient whose relabeled multi-index is `rel` on
// triangle `t` with relabeling rotation `rot`: relabeled position s is the
// stored local vertex (rot + s) % 3.
Index col_of(const SplineSpace& space, int t, int rot, const MultiIndex& rel) {
  int stored[3];
  stored[rot % 3] = rel.i;
  stored[(rot + 1) % 3] = rel.j;
  stored[(rot + 2) % 3] = rel.k;
  return space.col(t, MultiIndex{stored[0], stored[1], stored[2]});
}

} // namespace

std::vector<SmoothnessRow> smoothness_rows(const SplineSpace& space, int edge, int n) {
  const Triangulation& mesh = *space.mesh;
  const Edge& ed = mesh.edges.at(static_cast<size_t>(edge));
  if (!ed.interior()) throw std::invalid_argument("smoothness_rows: boundary edge");
  if (n < 0 || n > space.D) throw std::invalid_argument("smoothness_rows: order out of range");

  const EdgeFrame f = edge_frame(mesh, ed);
  const int D = space.D;

  std::vector<SmoothnessRow> rows;
  rows.reserve(static_cast<size_t>(D - n + 1));
  for (int j = D - n; j >= 0; --j) {
    const int k = D - n - j;
    SmoothnessRow row;
    row.edge = edge;
    row.order = n;
    row.j = j;
    row.entries.emplace_back(col_of(space, f.tri_Tt, f.rot_Tt, {n, j, k}), 1.0);
    for (int kappa = n; kappa >= 0; --kappa) {
      for (int mu = n - kappa; mu >= 0; --mu) {
        const int nu = n - kappa - mu;
        const double w = bernstein_value(n, {kappa, mu, nu}, f.b_v4);
        row.entries.emplace_back(col_of(space, f.tri_T, f.rot_T, {kappa, k + mu, j + nu}), -w);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SmoothnessSystem assemble_smoothness(const SplineSpace& space, int r) {
  if (r > space.D) throw std::invalid_argument("assemble_smoothness: r must be <= D");
  SmoothnessSystem sys;
  std::vector<Eigen::Triplet<double>> t0, tr;
  for (int e : space.mesh->interior_edges) {
    for (int n = 0; n <= r; ++n) {
      auto rows = smoothness_rows(space, e, n);
      auto& info = (n == 0) ? sys.rows_H0 : sys.rows_Hr;
      auto& trip = (n == 0) ? t0 : tr;
      for (auto& row : rows) {
        const int ridx = static_cast<int>(info.size());
        for (const auto& [c, v] : row.entries) trip.emplace_back(ridx, static_cast<int>(c), v);
        info.push_back(std::move(row));
      }
    }
  }
  sys.H0.resize(static_cast<Index>(sys.rows_H0.size()), space.dim());
  sys.H0.setFromTriplets(t0.begin(), t0.end());
  sys.Hr.resize(static_cast<Index>(sys.rows_Hr.size()), space.dim());
  sys.Hr.setFromTriplets(tr.begin(), tr.end());
  return sys;
}

} // namespace spcol
