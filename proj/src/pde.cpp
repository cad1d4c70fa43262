#include "spcol/pde.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace spcol {

namespace {

double sgn(double t) { return t < 0.0 ? -1.0 : 1.0; }

std::string point_str(const Vec2& p) {
  std::ostringstream os;
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

} // namespace

double apply_operator(const PDEOperator& op, const SecondPartials& d2, const Vec2& grad,
                      double value, const Vec2& x) {
  const double a11 = op.a11(x.x(), x.y());
  const double a12 = op.a12(x.x(), x.y());
  const double a21 = op.a21(x.x(), x.y());
  const double a22 = op.a22(x.x(), x.y());
  double r = a11 * d2.uxx + (a12 + a21) * d2.uxy + a22 * d2.uyy;
  r += op.b1(x.x(), x.y()) * grad.x() + op.b2(x.x(), x.y()) * grad.y();
  r += op.c0(x.x(), x.y()) * value;
  return r;
}

CordesReport check_cordes(const PDEOperator& op, const std::vector<Vec2>& samples) {
  if (!op.symmetric)
    throw std::invalid_argument("check_cordes: operator must be symmetric");
  if (samples.empty()) throw std::invalid_argument("check_cordes: no sample points");
  CordesReport rep;
  rep.eps_max = std::numeric_limits<double>::infinity();
  for (const Vec2& p : samples) {
    const double a11 = op.a11(p.x(), p.y());
    const double a12 = op.a12(p.x(), p.y());
    const double a21 = op.a21(p.x(), p.y());
    const double a22 = op.a22(p.x(), p.y());
    const double trace = a11 + a22;
    if (trace == 0.0)
      throw NumericalError("check_cordes: zero trace at " + point_str(p));
    const double ratio = (a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22) / (trace * trace);
    if (ratio > rep.ratio_max) {
      rep.ratio_max = ratio;
      rep.worst_point = p;
    }
    rep.eps_max = std::min(rep.eps_max, 1.0 / ratio - 1.0);
  }
  rep.eps_max = std::min(rep.eps_max, 1.0);
  rep.holds = rep.eps_max > 0.0;
  return rep;
}

EllipticityReport check_ellipticity(const PDEOperator& op, const std::vector<Vec2>& samples,
                                    double lambda_min_threshold) {
  if (samples.empty()) throw std::invalid_argument("check_ellipticity: no sample points");
  EllipticityReport rep;
  rep.lambda_min = std::numeric_limits<double>::infinity();
  for (const Vec2& p : samples) {
    const double a11 = op.a11(p.x(), p.y());
    const double a22 = op.a22(p.x(), p.y());
    const double s = 0.5 * (op.a12(p.x(), p.y()) + op.a21(p.x(), p.y()));
    // Eigenvalues of [[a11, s], [s, a22]].
    const double mean = 0.5 * (a11 + a22);
    const double disc = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + s * s);
    const double lmin = mean - disc;
    if (lmin < rep.lambda_min) {
      rep.lambda_min = lmin;
      rep.worst_point = p;
    }
  }
  rep.holds = rep.lambda_min >= lambda_min_threshold;
  return rep;
}

double theta(const PDEOperator& op, const Vec2& x) {
  const double a11 = op.a11(x.x(), x.y());
  const double a12 = op.a12(x.x(), x.y());
  const double a21 = op.a21(x.x(), x.y());
  const double a22 = op.a22(x.x(), x.y());
  const double frob2 = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
  if (frob2 == 0.0) throw NumericalError("theta: zero denominator at " + point_str(x));
  return (a11 + a22) / frob2;
}

PDEOperator make_operator(const std::string& name) {
  auto zero = [](double, double) { return 0.0; };
  auto one = [](double, double) { return 1.0; };
  PDEOperator op;
  op.name = name;
  op.b1 = zero;
  op.b2 = zero;
  op.c0 = zero;
  if (name == "poisson") {
    op.a11 = one;
    op.a22 = one;
    op.a12 = zero;
    op.a21 = zero;
    op.symmetric = true;
  } else if (name == "ex0-smooth") {
    op.a11 = [](double x, double y) { return x * x + y * y; };
    op.a12 = [](double x, double y) { return std::cos(x * y); };
    op.a21 = [](double x, double y) { return std::exp(x * y); };
    op.a22 = [](double x, double y) { return x * x * x + y * y - std::sin(x * x + y * y); };
    op.b1 = [](double x, double y) { return 3.0 * std::cos(x) * y * y; };
    op.b2 = [](double x, double y) { return std::exp(-x * x - y * y); };
    op.symmetric = false;
  } else if (name == "ex1-cordes") {
    // a^{ij} = (1 + delta_ij) sign(x_i) sign(x_j); the diagonal is constant 2.
    auto two = [](double, double) { return 2.0; };
    auto off = [](double x, double y) { return sgn(x) * sgn(y); };
    op.a11 = two;
    op.a22 = two;
    op.a12 = off;
    op.a21 = off;
    op.symmetric = true;
  } else if (name == "ex2-cordes") {
    // a^{ij} = delta_ij + x_i x_j / |x|^2.
    auto dir = [](double x, double y, int i, int j) {
      const double r2 = x * x + y * y;
      double xi[2], xj[2];
      if (r2 == 0.0) {
        xi[0] = xi[1] = xj[0] = xj[1] = 1.0 / std::sqrt(2.0);
        return xi[i] * xj[j];
      }
      const double c[2] = {x, y};
      return c[i] * c[j] / r2;
    };
    op.a11 = [dir](double x, double y) { return 1.0 + dir(x, y, 0, 0); };
    op.a22 = [dir](double x, double y) { return 1.0 + dir(x, y, 1, 1); };
    op.a12 = [dir](double x, double y) { return dir(x, y, 0, 1); };
    op.a21 = op.a12;
    op.symmetric = true;
  } else {
    throw std::invalid_argument("unknown operator: " + name);
  }
  return op;
}

std::vector<std::string> operator_names() {
  return {"poisson", "ex0-smooth", "ex1-cordes", "ex2-cordes"};
}

} // namespace spcol
