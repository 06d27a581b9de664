#include "telegraph/quintic_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telegraph {

NodalStencil value_stencil() { return {{1.0, 26.0, 66.0, 26.0, 1.0}, 0}; }

NodalStencil first_derivative_stencil() { return {{-5.0, -50.0, 0.0, 50.0, 5.0}, -1}; }

NodalStencil second_derivative_stencil() { return {{20.0, 40.0, -120.0, 40.0, 20.0}, -2}; }

std::array<NodalStencil, 3> nodal_stencils() {
    return {value_stencil(), first_derivative_stencil(), second_derivative_stencil()};
}

namespace {

inline double pow5(double t) { return t * t * t * t * t; }
inline double pow4(double t) { return t * t * t * t; }
inline double pow3(double t) { return t * t * t; }

} // namespace

double basis_eval(const UniformGrid& grid, int i, double x, int order) {
    if (order < 0 || order > 2)
        throw std::domain_error("basis_eval: order must be 0, 1 or 2, got " +
                                std::to_string(order));
    if (i < -2 || i > grid.n() + 2)
        throw std::domain_error("basis_eval: basis index " + std::to_string(i) +
                                " outside [-2, N+2]");
    const double h = grid.h();
    if (x < grid.a() - 1e-12 * h || x > grid.b() + 1e-12 * h)
        throw std::domain_error("basis_eval: x = " + std::to_string(x) + " outside [" +
                                std::to_string(grid.a()) + ", " + std::to_string(grid.b()) + "]");

    // Piece index within the support [x_{i-3}, x_{i+3}); knot intervals are
    // half-open on the right, which puts b into the last in-domain piece.
    const int piece = static_cast<int>(std::floor((x - grid.node(i - 3)) / h));
    if (piece < 0 || piece > 5)
        return 0.0;

    const double d1 = x - grid.node(i - 3);
    const double d2 = x - grid.node(i - 2);
    const double d3 = x - grid.node(i - 1);
    const double e1 = grid.node(i + 3) - x;
    const double e2 = grid.node(i + 2) - x;
    const double e3 = grid.node(i + 1) - x;

    double r = 0.0;
    switch (piece) {
    case 0:
        r = (order == 0) ? pow5(d1) : (order == 1) ? 5.0 * pow4(d1) : 20.0 * pow3(d1);
        break;
    case 1:
        r = (order == 0)   ? pow5(d1) - 6.0 * pow5(d2)
            : (order == 1) ? 5.0 * pow4(d1) - 30.0 * pow4(d2)
                           : 20.0 * pow3(d1) - 120.0 * pow3(d2);
        break;
    case 2:
        r = (order == 0)   ? pow5(d1) - 6.0 * pow5(d2) + 15.0 * pow5(d3)
            : (order == 1) ? 5.0 * pow4(d1) - 30.0 * pow4(d2) + 75.0 * pow4(d3)
                           : 20.0 * pow3(d1) - 120.0 * pow3(d2) + 300.0 * pow3(d3);
        break;
    case 3:
        r = (order == 0)   ? pow5(e1) - 6.0 * pow5(e2) + 15.0 * pow5(e3)
            : (order == 1) ? -5.0 * pow4(e1) + 30.0 * pow4(e2) - 75.0 * pow4(e3)
                           : 20.0 * pow3(e1) - 120.0 * pow3(e2) + 300.0 * pow3(e3);
        break;
    case 4:
        r = (order == 0)   ? pow5(e1) - 6.0 * pow5(e2)
            : (order == 1) ? -5.0 * pow4(e1) + 30.0 * pow4(e2)
                           : 20.0 * pow3(e1) - 120.0 * pow3(e2);
        break;
    case 5:
        r = (order == 0) ? pow5(e1) : (order == 1) ? -5.0 * pow4(e1) : 20.0 * pow3(e1);
        break;
    }
    return r / pow5(h);
}

} // namespace telegraph
