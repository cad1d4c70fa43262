#pragma once

#include "spcol/bernstein.hpp"

#include <Eigen/Sparse>

namespace spcol {

using SpMat = Eigen::SparseMatrix<double>;

struct SmoothnessRow {
  int edge = -1;  // index into mesh.edges
  int order = 0;  // derivative order n
  int j = 0;      // row index within the order (j + k = D - n)
  std::vector<std::pair<Index, double>> entries;
};

// H0 stacks the order-0 rows of every interior edge; Hr stacks orders 1..r.
// Hc = 0 on both characterizes C^r membership inside S^{-1}_D.
struct SmoothnessSystem {
  SpMat H0, Hr;
  std::vector<SmoothnessRow> rows_H0, rows_Hr; // provenance, same row order
};

// Order-n smoothness rows across one interior edge. With the edge's triangles
// canonically relabeled as T = <v1,v2,v3> (smaller triangle index, rotated so
// the shared edge is (v2,v3)) and T~ = <v4,v3,v2>, the row for j+k = D-n is
//
//   c~_{n,j,k} - sum_{kappa+mu+nu = n} B^n_{kappa,mu,nu}(b(v4)) c_{kappa, k+mu, j+nu} = 0
//
// where b(v4) are the barycentric coordinates of v4 with respect to T.
std::vector<SmoothnessRow> smoothness_rows(const SplineSpace& space, int edge, int n);

// Rows ordered by edge index, then order ascending (0 in H0; 1..r in Hr),
// then j descending.
SmoothnessSystem assemble_smoothness(const SplineSpace& space, int r);
inline SmoothnessSystem assemble_smoothness(const SplineSpace& space) {
  return assemble_smoothness(space, space.r);
}

} // namespace spcol
