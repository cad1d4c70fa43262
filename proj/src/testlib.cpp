#include "spcol/testlib.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace spcol {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double t) { return t < 0.0 ? -1.0 : 1.0; }

std::map<std::string, ManufacturedSolution> build_registry() {
  std::map<std::string, ManufacturedSolution> reg;

  {
    ManufacturedSolution s;
    s.name = "us1"; // e^{(x^2+y^2)/2}
    s.u = [](double x, double y) { return std::exp(0.5 * (x * x + y * y)); };
    s.ux = [](double x, double y) { return x * std::exp(0.5 * (x * x + y * y)); };
    s.uy = [](double x, double y) { return y * std::exp(0.5 * (x * x + y * y)); };
    s.uxx = [](double x, double y) { return (1 + x * x) * std::exp(0.5 * (x * x + y * y)); };
    s.uxy = [](double x, double y) { return x * y * std::exp(0.5 * (x * x + y * y)); };
    s.uyy = [](double x, double y) { return (1 + y * y) * std::exp(0.5 * (x * x + y * y)); };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us2"; // cos(xy) + cos(pi (x^2+y^2))
    s.u = [](double x, double y) {
      return std::cos(x * y) + std::cos(kPi * (x * x + y * y));
    };
    s.ux = [](double x, double y) {
      return -y * std::sin(x * y) - 2 * kPi * x * std::sin(kPi * (x * x + y * y));
    };
    s.uy = [](double x, double y) {
      return -x * std::sin(x * y) - 2 * kPi * y * std::sin(kPi * (x * x + y * y));
    };
    s.uxx = [](double x, double y) {
      const double r2 = x * x + y * y;
      return -y * y * std::cos(x * y) - 2 * kPi * std::sin(kPi * r2) -
             4 * kPi * kPi * x * x * std::cos(kPi * r2);
    };
    s.uxy = [](double x, double y) {
      const double r2 = x * x + y * y;
      return -std::sin(x * y) - x * y * std::cos(x * y) -
             4 * kPi * kPi * x * y * std::cos(kPi * r2);
    };
    s.uyy = [](double x, double y) {
      const double r2 = x * x + y * y;
      return -x * x * std::cos(x * y) - 2 * kPi * std::sin(kPi * r2) -
             4 * kPi * kPi * y * y * std::cos(kPi * r2);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us3"; // 1/(1+x^2+y^2)
    auto w = [](double x, double y) { return 1.0 + x * x + y * y; };
    s.u = [w](double x, double y) { return 1.0 / w(x, y); };
    s.ux = [w](double x, double y) { return -2 * x / (w(x, y) * w(x, y)); };
    s.uy = [w](double x, double y) { return -2 * y / (w(x, y) * w(x, y)); };
    s.uxx = [w](double x, double y) {
      const double v = w(x, y);
      return -2 / (v * v) + 8 * x * x / (v * v * v);
    };
    s.uxy = [w](double x, double y) {
      const double v = w(x, y);
      return 8 * x * y / (v * v * v);
    };
    s.uyy = [w](double x, double y) {
      const double v = w(x, y);
      return -2 / (v * v) + 8 * y * y / (v * v * v);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us4"; // sin(pi (x^2+y^2)) + 1
    s.u = [](double x, double y) { return std::sin(kPi * (x * x + y * y)) + 1.0; };
    s.ux = [](double x, double y) { return 2 * kPi * x * std::cos(kPi * (x * x + y * y)); };
    s.uy = [](double x, double y) { return 2 * kPi * y * std::cos(kPi * (x * x + y * y)); };
    s.uxx = [](double x, double y) {
      const double r2 = x * x + y * y;
      return 2 * kPi * std::cos(kPi * r2) - 4 * kPi * kPi * x * x * std::sin(kPi * r2);
    };
    s.uxy = [](double x, double y) {
      return -4 * kPi * kPi * x * y * std::sin(kPi * (x * x + y * y));
    };
    s.uyy = [](double x, double y) {
      const double r2 = x * x + y * y;
      return 2 * kPi * std::cos(kPi * r2) - 4 * kPi * kPi * y * y * std::sin(kPi * r2);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us5"; // sin(3 pi x) sin(3 pi y)
    s.u = [](double x, double y) { return std::sin(3 * kPi * x) * std::sin(3 * kPi * y); };
    s.ux = [](double x, double y) {
      return 3 * kPi * std::cos(3 * kPi * x) * std::sin(3 * kPi * y);
    };
    s.uy = [](double x, double y) {
      return 3 * kPi * std::sin(3 * kPi * x) * std::cos(3 * kPi * y);
    };
    s.uxx = [](double x, double y) {
      return -9 * kPi * kPi * std::sin(3 * kPi * x) * std::sin(3 * kPi * y);
    };
    s.uxy = [](double x, double y) {
      return 9 * kPi * kPi * std::cos(3 * kPi * x) * std::cos(3 * kPi * y);
    };
    s.uyy = [](double x, double y) {
      return -9 * kPi * kPi * std::sin(3 * kPi * x) * std::sin(3 * kPi * y);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us6"; // arctan(x^2 - y^2)
    s.u = [](double x, double y) { return std::atan(x * x - y * y); };
    s.ux = [](double x, double y) {
      const double t = x * x - y * y;
      return 2 * x / (1 + t * t);
    };
    s.uy = [](double x, double y) {
      const double t = x * x - y * y;
      return -2 * y / (1 + t * t);
    };
    s.uxx = [](double x, double y) {
      const double t = x * x - y * y, w = 1 + t * t;
      return 2 / w - 8 * x * x * t / (w * w);
    };
    s.uxy = [](double x, double y) {
      const double t = x * x - y * y, w = 1 + t * t;
      return 8 * x * y * t / (w * w);
    };
    s.uyy = [](double x, double y) {
      const double t = x * x - y * y, w = 1 + t * t;
      return -2 / w - 8 * y * y * t / (w * w);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us7"; // -cos(x)cos(y) e^{-(x-pi)^2 - (y-pi)^2}
    auto E = [](double x, double y) {
      return std::exp(-(x - kPi) * (x - kPi) - (y - kPi) * (y - kPi));
    };
    auto P = [](double t) { return std::sin(t) + 2 * (t - kPi) * std::cos(t); };
    auto Pp = [](double t) { return 3 * std::cos(t) - 2 * (t - kPi) * std::sin(t); };
    s.u = [E](double x, double y) { return -std::cos(x) * std::cos(y) * E(x, y); };
    s.ux = [E, P](double x, double y) { return P(x) * std::cos(y) * E(x, y); };
    s.uy = [E, P](double x, double y) { return std::cos(x) * P(y) * E(x, y); };
    s.uxx = [E, P, Pp](double x, double y) {
      return (Pp(x) - 2 * (x - kPi) * P(x)) * std::cos(y) * E(x, y);
    };
    s.uxy = [E, P](double x, double y) { return -P(x) * P(y) * E(x, y); };
    s.uyy = [E, P, Pp](double x, double y) {
      return std::cos(x) * (Pp(y) - 2 * (y - kPi) * P(y)) * E(x, y);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "us8"; // tanh(20y - 20x^2) - tanh(20x - 20y^2); steep fronts
    auto parts = [](double x, double y) {
      struct V {
        double s, t, ds, dt, ax, ay, bx, by;
      } v;
      v.s = std::tanh(20 * y - 20 * x * x);
      v.t = std::tanh(20 * x - 20 * y * y);
      v.ds = 1 - v.s * v.s;
      v.dt = 1 - v.t * v.t;
      v.ax = -40 * x;
      v.ay = 20;
      v.bx = 20;
      v.by = -40 * y;
      return v;
    };
    s.u = [parts](double x, double y) {
      auto v = parts(x, y);
      return v.s - v.t;
    };
    s.ux = [parts](double x, double y) {
      auto v = parts(x, y);
      return v.ds * v.ax - v.dt * v.bx;
    };
    s.uy = [parts](double x, double y) {
      auto v = parts(x, y);
      return v.ds * v.ay - v.dt * v.by;
    };
    s.uxx = [parts](double x, double y) {
      auto v = parts(x, y);
      return -2 * v.s * v.ds * v.ax * v.ax + v.ds * (-40.0) + 2 * v.t * v.dt * v.bx * v.bx;
    };
    s.uxy = [parts](double x, double y) {
      auto v = parts(x, y);
      return -2 * v.s * v.ds * v.ax * v.ay + 2 * v.t * v.dt * v.bx * v.by;
    };
    s.uyy = [parts](double x, double y) {
      auto v = parts(x, y);
      return -2 * v.s * v.ds * v.ay * v.ay + 2 * v.t * v.dt * v.by * v.by - v.dt * (-40.0);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "uns1"; // (x^2+y^2)^{0.8}; second derivatives blow up at 0
    s.smooth = false;
    const double sig = 0.8;
    auto rho = [](double x, double y) { return x * x + y * y; };
    s.u = [rho, sig](double x, double y) { return std::pow(rho(x, y), sig); };
    s.ux = [rho, sig](double x, double y) {
      const double r = rho(x, y);
      return r == 0.0 ? 0.0 : 2 * sig * x * std::pow(r, sig - 1);
    };
    s.uy = [rho, sig](double x, double y) {
      const double r = rho(x, y);
      return r == 0.0 ? 0.0 : 2 * sig * y * std::pow(r, sig - 1);
    };
    s.uxx = [rho, sig](double x, double y) {
      const double r = rho(x, y);
      if (r == 0.0) return std::numeric_limits<double>::infinity();
      return 2 * sig * std::pow(r, sig - 1) + 4 * sig * (sig - 1) * x * x * std::pow(r, sig - 2);
    };
    s.uxy = [rho, sig](double x, double y) {
      const double r = rho(x, y);
      if (r == 0.0) return 0.0;
      return 4 * sig * (sig - 1) * x * y * std::pow(r, sig - 2);
    };
    s.uyy = [rho, sig](double x, double y) {
      const double r = rho(x, y);
      if (r == 0.0) return std::numeric_limits<double>::infinity();
      return 2 * sig * std::pow(r, sig - 1) + 4 * sig * (sig - 1) * y * y * std::pow(r, sig - 2);
    };
    reg[s.name] = s;
  }
  {
    ManufacturedSolution s;
    s.name = "uns2"; // (x e^{1-|x|} - x)(y e^{1-|y|} - y); kinks on the axes
    s.smooth = false;
    auto phi = [](double t) { return t * std::exp(1 - std::abs(t)) - t; };
    auto dphi = [](double t) { return std::exp(1 - std::abs(t)) * (1 - std::abs(t)) - 1; };
    auto ddphi = [](double t) { return -sgn(t) * std::exp(1 - std::abs(t)) * (2 - std::abs(t)); };
    s.u = [phi](double x, double y) { return phi(x) * phi(y); };
    s.ux = [phi, dphi](double x, double y) { return dphi(x) * phi(y); };
    s.uy = [phi, dphi](double x, double y) { return phi(x) * dphi(y); };
    s.uxx = [phi, ddphi](double x, double y) { return ddphi(x) * phi(y); };
    s.uxy = [dphi](double x, double y) { return dphi(x) * dphi(y); };
    s.uyy = [phi, ddphi](double x, double y) { return phi(x) * ddphi(y); };
    reg[s.name] = s;
  }
  return reg;
}

} // namespace

const std::map<std::string, ManufacturedSolution>& solution_registry() {
  static const auto reg = build_registry();
  return reg;
}

const ManufacturedSolution& get_solution(const std::string& name) {
  const auto& reg = solution_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown solution: " + name);
  return it->second;
}

std::pair<ScalarFn, ScalarFn> manufacture_rhs(const ManufacturedSolution& sol,
                                              const PDEOperator& op) {
  ScalarFn f = [sol, op](double x, double y) {
    const SecondPartials d2{sol.uxx(x, y), sol.uxy(x, y), sol.uyy(x, y)};
    const Vec2 grad(sol.ux(x, y), sol.uy(x, y));
    return -apply_operator(op, d2, grad, sol.u(x, y), Vec2(x, y));
  };
  return {f, sol.u};
}

PDEOperator with_manufactured(PDEOperator op, const ManufacturedSolution& sol) {
  auto [f, g] = manufacture_rhs(sol, op);
  op.f = std::move(f);
  op.g = std::move(g);
  return op;
}

} // namespace spcol
