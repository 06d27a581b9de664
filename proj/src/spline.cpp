#include "telegraph/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "telegraph/banded.hpp"
#include "telegraph/boundary.hpp"
#include "telegraph/quintic_basis.hpp"

namespace telegraph {

SplineCoefficients::SplineCoefficients(UniformGrid grid_, std::vector<double> coeffs,
                                       int time_level_)
    : grid(grid_), c(std::move(coeffs)), time_level(time_level_) {
    if (static_cast<int>(c.size()) != grid.n() + 5)
        throw std::invalid_argument("SplineCoefficients: need N+5 = " +
                                    std::to_string(grid.n() + 5) + " coefficients, got " +
                                    std::to_string(c.size()));
    for (double v : c)
        if (!std::isfinite(v))
            throw std::invalid_argument("SplineCoefficients: non-finite coefficient");
}

double eval_spline(const SplineCoefficients& coeffs, double x, int order) {
    const UniformGrid& g = coeffs.grid;
    if (x < g.a() - 1e-12 * g.h() || x > g.b() + 1e-12 * g.h())
        throw std::domain_error("eval_spline: x = " + std::to_string(x) + " outside [" +
                                std::to_string(g.a()) + ", " + std::to_string(g.b()) + "]");
    // Only the six basis functions overlapping x's interval contribute.
    int j = static_cast<int>(std::floor((x - g.a()) / g.h()));
    j = std::clamp(j, 0, g.n() - 1);
    double sum = 0.0;
    for (int i = j - 2; i <= j + 3; ++i)
        sum += coeffs.at(i) * basis_eval(g, i, x, order);
    return sum;
}

namespace {

double stencil_at_node(const SplineCoefficients& coeffs, int node, const NodalStencil& st) {
    if (node < 0 || node > coeffs.grid.n())
        throw std::domain_error("node index " + std::to_string(node) + " outside [0, N]");
    double sum = 0.0;
    for (int m = 0; m < 5; ++m)
        sum += st.weights[static_cast<size_t>(m)] * coeffs.at(node - 2 + m);
    const double h = coeffs.grid.h();
    switch (st.h_exponent) {
    case 0: return sum;
    case -1: return sum / h;
    default: return sum / (h * h);
    }
}

} // namespace

double value_at_node(const SplineCoefficients& coeffs, int node) {
    return stencil_at_node(coeffs, node, value_stencil());
}

double first_derivative_at_node(const SplineCoefficients& coeffs, int node) {
    return stencil_at_node(coeffs, node, first_derivative_stencil());
}

double second_derivative_at_node(const SplineCoefficients& coeffs, int node) {
    return stencil_at_node(coeffs, node, second_derivative_stencil());
}

std::vector<double> values_at_nodes(const SplineCoefficients& coeffs) {
    std::vector<double> v(static_cast<size_t>(coeffs.grid.n()) + 1);
    for (int i = 0; i <= coeffs.grid.n(); ++i)
        v[static_cast<size_t>(i)] = value_at_node(coeffs, i);
    return v;
}

namespace {

// One-sided second derivative from the first six samples, exact for
// polynomials through degree five.
double end_curvature(const double* v, int stride, double h) {
    return (45.0 * v[0] - 154.0 * v[stride] + 214.0 * v[2 * stride] - 156.0 * v[3 * stride] +
            61.0 * v[4 * stride] - 10.0 * v[5 * stride]) /
           (12.0 * h * h);
}

} // namespace

SplineCoefficients fit_interpolant(const UniformGrid& grid, std::span<const double> values,
                                   double d_left, double d_right) {
    const int n = grid.n();
    const double h = grid.h();
    if (static_cast<int>(values.size()) != n + 1)
        throw std::invalid_argument("fit_interpolant: need N+1 = " + std::to_string(n + 1) +
                                    " values, got " + std::to_string(values.size()));
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("fit_interpolant: non-finite value");

    // Interpolation rows with the ghosts eliminated.  The corner equations
    // degenerate (the eliminated value row is identically satisfied), so
    // rows 0 and N instead pin the end curvature, estimated from the data;
    // in eliminated coordinates h^2*S''(a) = 540 c0 + 600 c1 + 60 c2
    // - 6 h d_left - 10 values[0], and mirrored on the right.
    const EdgeRows rows = eliminated_edge_rows(1.0, 26.0, 66.0);
    const EdgeCouplings cpl = eliminated_edge_couplings(1.0, 26.0, h);

    BandedSystem sys(n + 1, 2, 2);
    sys.set(0, 0, 540.0);
    sys.set(0, 1, 600.0);
    sys.set(0, 2, 60.0);
    for (int m = 0; m < 4; ++m) {
        sys.set(1, m, rows.adjacent[static_cast<size_t>(m)]);
        sys.set(n - 1, n - m, rows.adjacent[static_cast<size_t>(m)]);
    }
    const NodalStencil vs = value_stencil();
    for (int i = 2; i <= n - 2; ++i)
        for (int m = 0; m < 5; ++m)
            sys.set(i, i - 2 + m, vs.weights[static_cast<size_t>(m)]);
    sys.set(n, n - 2, 60.0);
    sys.set(n, n - 1, 600.0);
    sys.set(n, n, 540.0);

    const double d2_left = end_curvature(values.data(), 1, h);
    const double d2_right = end_curvature(values.data() + n, -1, h);

    std::vector<double> rhs(values.begin(), values.end());
    rhs[0] = h * h * d2_left + 6.0 * h * d_left + 10.0 * values[0];
    rhs[1] += cpl.adjacent_value * values[0] + cpl.adjacent_slope * d_left;
    rhs[static_cast<size_t>(n - 1)] += cpl.adjacent_value * values[static_cast<size_t>(n)] -
                                       cpl.adjacent_slope * d_right;
    rhs[static_cast<size_t>(n)] =
        h * h * d2_right - 6.0 * h * d_right + 10.0 * values[static_cast<size_t>(n)];

    sys.factor();
    const std::vector<double> interior = sys.solve(rhs);

    std::vector<double> c(static_cast<size_t>(n) + 5);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i + 2)] = interior[static_cast<size_t>(i)];
    const GhostPair left =
        left_ghosts(interior[0], interior[1], interior[2], values[0], d_left, h);
    const GhostPair right =
        right_ghosts(interior[static_cast<size_t>(n)], interior[static_cast<size_t>(n - 1)],
                     interior[static_cast<size_t>(n - 2)], values[static_cast<size_t>(n)],
                     d_right, h);
    c[1] = left.adjacent;  // c_{-1}
    c[0] = left.outer;     // c_{-2}
    c[static_cast<size_t>(n + 3)] = right.adjacent;
    c[static_cast<size_t>(n + 4)] = right.outer;
    return SplineCoefficients(grid, std::move(c), 0);
}

} // namespace telegraph
