#pragma once

#include <span>
#include <vector>

#include "telegraph/grid.hpp"

namespace telegraph {

// One time level of the collocation ansatz: the N+5 coefficients of the
// quintic B-spline basis, logically indexed -2..N+2.
struct SplineCoefficients {
    SplineCoefficients(UniformGrid grid, std::vector<double> coeffs, int time_level);

    double at(int i) const { return c[static_cast<size_t>(i + 2)]; }
    double& at(int i) { return c[static_cast<size_t>(i + 2)]; }

    UniformGrid grid;
    std::vector<double> c; // size N+5
    int time_level;
};

// Sum of c_i * B_i^(order)(x); order in {0,1,2}, x in [a,b].
double eval_spline(const SplineCoefficients& coeffs, double x, int order);

// Nodal reads via the closed-form stencils (bit-stable; agrees with
// eval_spline at nodes to rounding).
double value_at_node(const SplineCoefficients& coeffs, int node);
double first_derivative_at_node(const SplineCoefficients& coeffs, int node);
double second_derivative_at_node(const SplineCoefficients& coeffs, int node);

std::vector<double> values_at_nodes(const SplineCoefficients& coeffs);

// Quintic spline through the N+1 nodal values with prescribed end slopes.
// The ghosts are eliminated against (values[0], values[N], d_left, d_right);
// the two row equations freed by that elimination are replaced by end
// curvature conditions estimated from the data with a one-sided six-point
// difference (exact through degree five, so quartic reproduction survives).
SplineCoefficients fit_interpolant(const UniformGrid& grid, std::span<const double> values,
                                   double d_left, double d_right);

} // namespace telegraph
