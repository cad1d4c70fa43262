#pragma once

#include "spcol/triangulation.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace spcol {

using Index = Eigen::Index;
using ScalarFn2 = std::function<double(double, double)>;

/// Exponent triple (i,j,k) with i+j+k = D.
struct MultiIndex {
  int i = 0, j = 0, k = 0;
  int degree() const { return i + j + k; }
  bool operator==(const MultiIndex&) const = default;
};

// Canonical order: i descending, then j descending. (D,0,0) comes first,
// (0,0,D) last.
std::vector<MultiIndex> multi_indices(int D);
int local_index(int D, const MultiIndex& m);
inline int coeffs_per_triangle(int D) { return (D + 1) * (D + 2) / 2; }

// Affine frame of a non-degenerate triangle: barycentric coordinates and
// their constant Cartesian gradients.
class TriFrame {
public:
  TriFrame(const Vec2& v1, const Vec2& v2, const Vec2& v3);
  explicit TriFrame(const std::array<Vec2, 3>& v) : TriFrame(v[0], v[1], v[2]) {}

  Eigen::Vector3d barycentric(const Vec2& p) const;
  const Vec2& grad(int l) const { return grad_[static_cast<size_t>(l)]; }
  double det() const { return det_; } // twice the signed area

private:
  std::array<Vec2, 3> v_;
  std::array<Vec2, 3> grad_;
  double det_ = 0.0;
};

// Single Bernstein basis polynomial D!/(i!j!k!) b1^i b2^j b3^k. The
// multinomial coefficient is accumulated multiplicatively (exact in double
// up to D = 15).
double bernstein_value(int D, const MultiIndex& m, const Eigen::Vector3d& b);

// All degree-D Bernstein values at b, canonical order, via the recurrence
// B^d_ijk = b1 B^{d-1}_{i-1,j,k} + b2 B^{d-1}_{i,j-1,k} + b3 B^{d-1}_{i,j,k-1}.
Eigen::VectorXd bernstein_all(int D, const Eigen::Vector3d& b);

struct DerivTuple {
  double value = 0, dx = 0, dy = 0, dxx = 0, dxy = 0, dyy = 0;
};

// Per-basis Cartesian value and first/second partials at one point, for the
// whole degree-D basis of a triangle (canonical order).
struct BasisDerivs {
  Eigen::VectorXd value, dx, dy, dxx, dxy, dyy;
};
BasisDerivs basis_derivs(int D, const TriFrame& frame, const Vec2& p);

DerivTuple bernstein_derivs(int D, const MultiIndex& m, const std::array<Vec2, 3>& tri,
                            const Vec2& p);

// Domain points {(i v1 + j v2 + k v3)/D : i+j+k = D}, canonical order.
std::vector<Vec2> domain_points(const std::array<Vec2, 3>& tri, int D);

// Discontinuous spline space S^{-1}_D with a C^r smoothness target. The
// global coefficient layout is (triangle id, canonical local index).
struct SplineSpace {
  const Triangulation* mesh = nullptr;
  int D = 0;
  int r = 0;

  SplineSpace(const Triangulation& m, int degree, int smoothness)
      : mesh(&m), D(degree), r(smoothness) {
    if (degree < 1) throw std::invalid_argument("SplineSpace: degree must be positive");
    if (smoothness < 0 || smoothness > degree)
      throw std::invalid_argument("SplineSpace: need 0 <= r <= D");
  }

  int per_triangle() const { return coeffs_per_triangle(D); }
  Index dim() const { return static_cast<Index>(mesh->nt()) * per_triangle(); }
  Index col(int t, int local) const { return static_cast<Index>(t) * per_triangle() + local; }
  Index col(int t, const MultiIndex& m) const { return col(t, local_index(D, m)); }
};

struct SplineEval {
  double value = 0;
  Vec2 grad = Vec2::Zero();
};

// B-form evaluation on the containing triangle (smallest-index tie-break).
// Returns nullopt when p is outside the mesh.
std::optional<SplineEval> eval_spline(const SplineSpace& space, const Eigen::VectorXd& c,
                                      const Vec2& p, bool with_gradient = false);
std::optional<SplineEval> eval_spline(const SplineSpace& space, const Eigen::VectorXd& c,
                                      const Vec2& p, const PointLocator& locator,
                                      bool with_gradient = false);

// Local B-form coefficients of f on one triangle, by interpolation at the
// degree-D domain points (reproduces polynomials of degree <= D).
Eigen::VectorXd interpolate_on_triangle(int D, const std::array<Vec2, 3>& tri,
                                        const ScalarFn2& f);

// Per-triangle interpolation over the whole mesh.
Eigen::VectorXd interpolate(const SplineSpace& space, const ScalarFn2& f);

} // namespace spcol
