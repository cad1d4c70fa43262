#pragma once

#include "spcol/pde.hpp"

#include <map>
#include <string>

namespace spcol {

// Benchmark solution with hand-coded first and second partials. Non-smooth
// entries (|.| terms) use one-sided derivatives with sign(0) = 1.
struct ManufacturedSolution {
  std::string name;
  bool smooth = true;
  ScalarFn u, ux, uy, uxx, uxy, uyy;
};

// us1..us8, uns1, uns2.
const std::map<std::string, ManufacturedSolution>& solution_registry();
const ManufacturedSolution& get_solution(const std::string& name);

// f = -(L u) pointwise from the hand-coded derivatives, g = u. With this
// pair the solution solves L s + f = 0 with s = g on the boundary.
std::pair<ScalarFn, ScalarFn> manufacture_rhs(const ManufacturedSolution& sol,
                                              const PDEOperator& op);

// Convenience: operator with f, g filled in.
PDEOperator with_manufactured(PDEOperator op, const ManufacturedSolution& sol);

} // namespace spcol
