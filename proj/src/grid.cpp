#include "telegraph/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telegraph {

UniformGrid::UniformGrid(double a, double b, int n_intervals)
    : a_(a), b_(b), h_((b - a) / n_intervals), n_(n_intervals) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("UniformGrid: endpoints must be finite");
    if (!(b > a))
        throw std::invalid_argument("UniformGrid: need b > a, got [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
    if (n_intervals < 5)
        throw std::invalid_argument("UniformGrid: need N >= 5, got N = " +
                                    std::to_string(n_intervals));
    // h*N == b-a up to rounding by construction; keep the check cheap and fatal.
    if (std::abs(h_ * n_ - (b_ - a_)) > 1e-12 * (b_ - a_))
        throw std::invalid_argument("UniformGrid: inconsistent spacing");
}

} // namespace telegraph
