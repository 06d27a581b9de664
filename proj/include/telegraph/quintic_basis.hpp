#pragma once

#include <array>

#include "telegraph/grid.hpp"

namespace telegraph {

// Weights applied to coefficients c_{i-2}..c_{i+2} when a spline quantity is
// read off at node x_i.  The physical value carries a factor h^h_exponent,
// kept symbolic so callers scale exactly once.
struct NodalStencil {
    std::array<double, 5> weights;
    int h_exponent;
};

NodalStencil value_stencil();             // (1, 26, 66, 26, 1),      h^0
NodalStencil first_derivative_stencil();  // (-5, -50, 0, 50, 5),     h^-1
NodalStencil second_derivative_stencil(); // (20, 40, -120, 40, 20),  h^-2

std::array<NodalStencil, 3> nodal_stencils();

// B_i^(order)(x) for the quintic B-spline centred on node i, order in {0,1,2}.
// Valid basis indices are -2..N+2; the support is [x_{i-3}, x_{i+3}] and the
// result is zero outside it.  x must lie in [a,b] (tolerance 1e-12*h).
double basis_eval(const UniformGrid& grid, int i, double x, int order);

} // namespace telegraph
