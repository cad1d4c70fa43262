#pragma once

#include "spcol/triangulation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spcol {

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<double(double, double)>;

// Second order operator in non-divergence form,
//   L u = sum a^{ij} u_{x_i x_j} + sum b^i u_{x_i} + c u,
// with Dirichlet data g and right-hand side f (residual convention: the
// solver drives L s(xi) + f(xi) to zero, i.e. f = -L u for the exact u).
struct PDEOperator {
  std::string name;
  ScalarFn a11, a12, a21, a22;
  ScalarFn b1, b2;
  ScalarFn c0;
  ScalarFn f; // right-hand side; empty until manufactured or user-set
  ScalarFn g; // Dirichlet boundary data
  bool symmetric = false;
};

struct SecondPartials {
  double uxx = 0, uxy = 0, uyy = 0;
};

// sum a^{ij} u_{x_i x_j} + sum b^i u_{x_i} + c u; the mixed term pairs u_xy
// with a12 + a21.
double apply_operator(const PDEOperator& op, const SecondPartials& d2, const Vec2& grad,
                      double value, const Vec2& x);

struct CordesReport {
  bool holds = false;
  double eps_max = 0.0;   // largest eps in (0,1] with ratio <= 1/(d-1+eps), d=2
  double ratio_max = 0.0; // worst sampled value of sum (a^ij)^2 / (sum a^ii)^2
  Vec2 worst_point = Vec2::Zero();
};

// Samples the Cordes ratio; eps_max = min over samples of (1/ratio - 1),
// clamped to 1. Requires a symmetric operator and nonzero trace at every
// sample.
CordesReport check_cordes(const PDEOperator& op, const std::vector<Vec2>& samples);

struct EllipticityReport {
  bool holds = false;
  double lambda_min = 0.0; // smallest eigenvalue of the symmetrized a over samples
  Vec2 worst_point = Vec2::Zero();
};

EllipticityReport check_ellipticity(const PDEOperator& op, const std::vector<Vec2>& samples,
                                    double lambda_min_threshold = 1e-10);

// trace(a) / ||a||_F^2 at x.
double theta(const PDEOperator& op, const Vec2& x);

// Built-in operators: "poisson", "ex0-smooth", "ex1-cordes", "ex2-cordes".
// Coefficient discontinuities use the convention sign(0) = 1; the ex2
// coefficient x_i x_j / |x|^2 at the origin is evaluated along (1,1)/sqrt(2).
PDEOperator make_operator(const std::string& name);
std::vector<std::string> operator_names();

} // namespace spcol
