#include "spcol/bernstein.hpp"

#include <Eigen/LU>

#include <cmath>

namespace spcol {

std::vector<MultiIndex> multi_indices(int D) {
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>(coeffs_per_triangle(D)));
  for (int i = D; i >= 0; --i)
    for (int j = D - i; j >= 0; --j) out.push_back({i, j, D - i - j});
  return out;
}

int local_index(int D, const MultiIndex& m) {
  const int level = D - m.i;
  return level * (level + 1) / 2 + (level - m.j);
}

TriFrame::TriFrame(const Vec2& v1, const Vec2& v2, const Vec2& v3) : v_{v1, v2, v3} {
  det_ = (v2.x() - v1.x()) * (v3.y() - v1.y()) - (v2.y() - v1.y()) * (v3.x() - v1.x());
  if (det_ == 0.0) throw std::invalid_argument("TriFrame: degenerate triangle");
  grad_[0] = Vec2(v2.y() - v3.y(), v3.x() - v2.x()) / det_;
  grad_[1] = Vec2(v3.y() - v1.y(), v1.x() - v3.x()) / det_;
  grad_[2] = Vec2(v1.y() - v2.y(), v2.x() - v1.x()) / det_;
}

Eigen::Vector3d TriFrame::barycentric(const Vec2& p) const {
  auto cross = [](const Vec2& u, const Vec2& w) { return u.x() * w.y() - u.y() * w.x(); };
  Eigen::Vector3d b;
  b[0] = cross(v_[1] - p, v_[2] - p) / det_;
  b[1] = cross(v_[2] - p, v_[0] - p) / det_;
  b[2] = cross(v_[0] - p, v_[1] - p) / det_;
  return b;
}

double bernstein_value(int D, const MultiIndex& m, const Eigen::Vector3d& b) {
  if (m.i < 0 || m.j < 0 || m.k < 0 || m.degree() != D)
    throw std::invalid_argument("bernstein_value: invalid multi-index");
  // trinomial(D; i,j,k) = C(i+j, i) * C(D, i+j), each factor built as a
  // running product of ratios.
  auto binom = [](int n, int k) {
    double c = 1.0;
    for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
  };
  const double coeff = binom(m.i + m.j, m.i) * binom(D, m.i + m.j);
  return coeff * std::pow(b[0], m.i) * std::pow(b[1], m.j) * std::pow(b[2], m.k);
}

Eigen::VectorXd bernstein_all(int D, const Eigen::Vector3d& b) {
  Eigen::VectorXd cur(1);
  cur[0] = 1.0;
  for (int d = 1; d <= D; ++d) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(coeffs_per_triangle(d));
    int idx = 0;
    for (int i = d; i >= 0; --i) {
      for (int j = d - i; j >= 0; --j, ++idx) {
        const int k = d - i - j;
        double v = 0.0;
        if (i > 0) v += b[0] * cur[local_index(d - 1, {i - 1, j, k})];
        if (j > 0) v += b[1] * cur[local_index(d - 1, {i, j - 1, k})];
        if (k > 0) v += b[2] * cur[local_index(d - 1, {i, j, k - 1})];
        next[idx] = v;
      }
    }
    cur.swap(next);
  }
  return cur;
}

BasisDerivs basis_derivs(int D, const TriFrame& frame, const Vec2& p) {
  const Eigen::Vector3d b = frame.barycentric(p);
  const Eigen::VectorXd tD = bernstein_all(D, b);
  const Eigen::VectorXd t1 = D >= 1 ? bernstein_all(D - 1, b) : Eigen::VectorXd();
  const Eigen::VectorXd t2 = D >= 2 ? bernstein_all(D - 2, b) : Eigen::VectorXd();

  const int Q = coeffs_per_triangle(D);
  BasisDerivs out;
  out.value = tD;
  out.dx.resize(Q);
  out.dy.resize(Q);
  out.dxx.resize(Q);
  out.dxy.resize(Q);
  out.dyy.resize(Q);

  const Vec2 g0 = frame.grad(0), g1 = frame.grad(1), g2 = frame.grad(2);
  const auto mis = multi_indices(D);
  for (int q = 0; q < Q; ++q) {
    const MultiIndex m = mis[static_cast<size_t>(q)];
    // dB/db_l = D * B^{D-1} with the l-th exponent lowered.
    double p0 = 0, p1 = 0, p2 = 0;
    if (D >= 1) {
      if (m.i > 0) p0 = D * t1[local_index(D - 1, {m.i - 1, m.j, m.k})];
      if (m.j > 0) p1 = D * t1[local_index(D - 1, {m.i, m.j - 1, m.k})];
      if (m.k > 0) p2 = D * t1[local_index(D - 1, {m.i, m.j, m.k - 1})];
    }
    out.dx[q] = p0 * g0.x() + p1 * g1.x() + p2 * g2.x();
    out.dy[q] = p0 * g0.y() + p1 * g1.y() + p2 * g2.y();

    double s00 = 0, s11 = 0, s22 = 0, s01 = 0, s02 = 0, s12 = 0;
    if (D >= 2) {
      const double f = static_cast<double>(D) * (D - 1);
      if (m.i > 1) s00 = f * t2[local_index(D - 2, {m.i - 2, m.j, m.k})];
      if (m.j > 1) s11 = f * t2[local_index(D - 2, {m.i, m.j - 2, m.k})];
      if (m.k > 1) s22 = f * t2[local_index(D - 2, {m.i, m.j, m.k - 2})];
      if (m.i > 0 && m.j > 0) s01 = f * t2[local_index(D - 2, {m.i - 1, m.j - 1, m.k})];
      if (m.i > 0 && m.k > 0) s02 = f * t2[local_index(D - 2, {m.i - 1, m.j, m.k - 1})];
      if (m.j > 0 && m.k > 0) s12 = f * t2[local_index(D - 2, {m.i, m.j - 1, m.k - 1})];
    }
    auto contract = [&](double u0, double u1, double u2, double w0, double w1, double w2) {
      return s00 * u0 * w0 + s11 * u1 * w1 + s22 * u2 * w2 + s01 * (u0 * w1 + u1 * w0) +
             s02 * (u0 * w2 + u2 * w0) + s12 * (u1 * w2 + u2 * w1);
    };
    out.dxx[q] = contract(g0.x(), g1.x(), g2.x(), g0.x(), g1.x(), g2.x());
    out.dxy[q] = contract(g0.x(), g1.x(), g2.x(), g0.y(), g1.y(), g2.y());
    out.dyy[q] = contract(g0.y(), g1.y(), g2.y(), g0.y(), g1.y(), g2.y());
  }
  return out;
}

DerivTuple bernstein_derivs(int D, const MultiIndex& m, const std::array<Vec2, 3>& tri,
                            const Vec2& p) {
  const TriFrame frame(tri);
  const BasisDerivs all = basis_derivs(D, frame, p);
  const int q = local_index(D, m);
  return {all.value[q], all.dx[q], all.dy[q], all.dxx[q], all.dxy[q], all.dyy[q]};
}

std::vector<Vec2> domain_points(const std::array<Vec2, 3>& tri, int D) {
  if (D < 1) throw std::invalid_argument("domain_points: degree must be >= 1");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(coeffs_per_triangle(D)));
  for (const MultiIndex& m : multi_indices(D))
    pts.push_back((m.i * tri[0] + m.j * tri[1] + m.k * tri[2]) / D);
  return pts;
}

namespace {

std::optional<SplineEval> eval_at(const SplineSpace& space, const Eigen::VectorXd& c,
                                  const Vec2& p, const LocateResult& loc, bool with_gradient) {
  const int t = loc.triangle;
  const int Q = space.per_triangle();
  const auto seg = c.segment(space.col(t, 0), Q);
  SplineEval out;
  if (with_gradient) {
    const BasisDerivs d = basis_derivs(space.D, TriFrame(space.mesh->corners(t)), p);
    out.value = d.value.dot(seg);
    out.grad = Vec2(d.dx.dot(seg), d.dy.dot(seg));
  } else {
    out.value = bernstein_all(space.D, loc.bary).dot(seg);
  }
  return out;
}

} // namespace

std::optional<SplineEval> eval_spline(const SplineSpace& space, const Eigen::VectorXd& c,
                                      const Vec2& p, bool with_gradient) {
  if (c.size() != space.dim()) throw std::invalid_argument("eval_spline: coefficient size");
  const auto loc = locate_point(*space.mesh, p);
  if (!loc) return std::nullopt;
  return eval_at(space, c, p, *loc, with_gradient);
}

std::optional<SplineEval> eval_spline(const SplineSpace& space, const Eigen::VectorXd& c,
                                      const Vec2& p, const PointLocator& locator,
                                      bool with_gradient) {
  if (c.size() != space.dim()) throw std::invalid_argument("eval_spline: coefficient size");
  const auto loc = locator.locate(p);
  if (!loc) return std::nullopt;
  return eval_at(space, c, p, *loc, with_gradient);
}

Eigen::VectorXd interpolate_on_triangle(int D, const std::array<Vec2, 3>& tri,
                                        const ScalarFn2& f) {
  const int Q = coeffs_per_triangle(D);
  const auto pts = domain_points(tri, D);
  const TriFrame frame(tri);
  Eigen::MatrixXd V(Q, Q);
  Eigen::VectorXd rhs(Q);
  for (int r = 0; r < Q; ++r) {
    V.row(r) = bernstein_all(D, frame.barycentric(pts[static_cast<size_t>(r)])).transpose();
    rhs[r] = f(pts[static_cast<size_t>(r)].x(), pts[static_cast<size_t>(r)].y());
  }
  return Eigen::PartialPivLU<Eigen::MatrixXd>(V).solve(rhs);
}

Eigen::VectorXd interpolate(const SplineSpace& space, const ScalarFn2& f) {
  Eigen::VectorXd c(space.dim());
  for (int t = 0; t < space.mesh->nt(); ++t)
    c.segment(space.col(t, 0), space.per_triangle()) =
        interpolate_on_triangle(space.D, space.mesh->corners(t), f);
  return c;
}

} // namespace spcol
