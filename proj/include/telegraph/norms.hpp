#pragma once

#include <span>
#include <utility>
#include <vector>

#include "telegraph/problem.hpp"
#include "telegraph/spline.hpp"

namespace telegraph {

struct ErrorNorms {
    double l_inf;
    double l2;  // sqrt(h * sum e_i^2)
    double rms; // sqrt(sum e_i^2 / M)
};

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact, double h);

struct ErrorReport {
    double t;
    ErrorNorms norms;
    int n_intervals;
    double k;
    GammaChoice gamma;
};

// Norms of U - u at the nodes x_1..x_N (the node at the left end is skipped;
// the boundary rows pin it to the data anyway).  Requires problem.exact.
ErrorNorms nodal_error_norms(const TelegraphProblem& problem, const SplineCoefficients& coeffs,
                             double t);

// log(e_j/e_{j+1}) / log(s_j/s_{j+1}) for each successive pair of
// (step, error) entries.  Steps must decrease strictly; errors must be
// positive (an exactly reproduced solution has no defined order).
std::vector<double> observed_orders(std::span<const std::pair<double, double>> step_error);

// Convenience: the last entry of observed_orders.
double observed_order(std::span<const std::pair<double, double>> step_error);

} // namespace telegraph
