#pragma once

#include <array>

namespace telegraph {

// Eliminating the four ghost coefficients against the boundary data.
//
// The value and slope conditions at x_0 determine the two left ghosts from
// the three nearest interior coefficients:
//
//   c_{-1} = -33/8 c_0 - 9/4 c_1 - 1/8 c_2 + h*slope/80 + value/16
//   c_{-2} = 165/4 c_0 + 65/2 c_1 + 9/4 c_2 - 13*h*slope/40 - 5*value/8
//
// and symmetrically at x_N with the sign of the slope term flipped.

struct GhostPair {
    double adjacent; // c_{-1} (resp. c_{N+1})
    double outer;    // c_{-2} (resp. c_{N+2})
};

GhostPair left_ghosts(double c0, double c1, double c2, double value, double slope, double h);
GhostPair right_ghosts(double cN, double cN1, double cN2, double value, double slope, double h);

// Collocation rows 0..1 (and, mirrored, N-1..N) after the ghosts of a
// symmetric 5-point row (outer, inner, center, inner, outer) are eliminated.
struct EdgeRows {
    std::array<double, 3> corner;   // columns 0,1,2   (mirrored: N,N-1,N-2)
    std::array<double, 4> adjacent; // columns 0,1,2,3 (mirrored: N,N-1,N-2,N-3)
};

EdgeRows eliminated_edge_rows(double outer, double inner, double center);

// Right-hand-side couplings created by the same substitution, in left-edge
// orientation: rhs_row += *_value * g_value + *_slope * g_slope.  At the
// right edge the slope couplings change sign.
struct EdgeCouplings {
    double corner_value;
    double corner_slope;
    double adjacent_value;
    double adjacent_slope;
};

EdgeCouplings eliminated_edge_couplings(double outer, double inner, double h);

} // namespace telegraph
