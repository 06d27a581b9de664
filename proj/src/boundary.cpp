#include "telegraph/boundary.hpp"

namespace telegraph {

namespace {

GhostPair ghosts(double c_corner, double c_next, double c_third, double value, double slope,
                 double h) {
    GhostPair g;
    g.adjacent = -33.0 / 8.0 * c_corner - 9.0 / 4.0 * c_next - 1.0 / 8.0 * c_third +
                 h * slope / 80.0 + value / 16.0;
    g.outer = 165.0 / 4.0 * c_corner + 65.0 / 2.0 * c_next + 9.0 / 4.0 * c_third -
              13.0 * h * slope / 40.0 - 5.0 * value / 8.0;
    return g;
}

} // namespace

GhostPair left_ghosts(double c0, double c1, double c2, double value, double slope, double h) {
    return ghosts(c0, c1, c2, value, slope, h);
}

GhostPair right_ghosts(double cN, double cN1, double cN2, double value, double slope, double h) {
    return ghosts(cN, cN1, cN2, value, -slope, h);
}

EdgeRows eliminated_edge_rows(double outer, double inner, double center) {
    EdgeRows rows;
    rows.corner = {center - 33.0 / 8.0 * inner + 165.0 / 4.0 * outer,
                   65.0 / 2.0 * outer - 5.0 / 4.0 * inner,
                   13.0 / 4.0 * outer - 1.0 / 8.0 * inner};
    rows.adjacent = {inner - 33.0 / 8.0 * outer, center - 9.0 / 4.0 * outer,
                     inner - 1.0 / 8.0 * outer, outer};
    return rows;
}

EdgeCouplings eliminated_edge_couplings(double outer, double inner, double h) {
    EdgeCouplings c;
    c.corner_value = 5.0 / 8.0 * outer - inner / 16.0;
    c.corner_slope = 13.0 * outer * h / 40.0 - inner * h / 80.0;
    c.adjacent_value = -outer / 16.0;
    c.adjacent_slope = -outer * h / 80.0;
    return c;
}

} // namespace telegraph
