#include "telegraph/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telegraph {

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact, double h) {
    if (numeric.size() != exact.size())
        throw std::invalid_argument("error_norms: sample lengths differ (" +
                                    std::to_string(numeric.size()) + " vs " +
                                    std::to_string(exact.size()) + ")");
    if (numeric.empty())
        throw std::invalid_argument("error_norms: need at least one sample");
    double max_abs = 0.0;
    double sum_sq = 0.0;
    for (size_t i = 0; i < numeric.size(); ++i) {
        const double e = std::abs(numeric[i] - exact[i]);
        max_abs = std::max(max_abs, e);
        sum_sq += e * e;
    }
    ErrorNorms n;
    n.l_inf = max_abs;
    n.l2 = std::sqrt(h * sum_sq);
    n.rms = std::sqrt(sum_sq / static_cast<double>(numeric.size()));
    return n;
}

ErrorNorms nodal_error_norms(const TelegraphProblem& problem, const SplineCoefficients& coeffs,
                             double t) {
    if (!problem.exact)
        throw std::invalid_argument("problem '" + problem.name + "' has no exact solution");
    const UniformGrid& grid = coeffs.grid;
    std::vector<double> numeric(static_cast<size_t>(grid.n()));
    std::vector<double> exact(static_cast<size_t>(grid.n()));
    for (int i = 1; i <= grid.n(); ++i) {
        numeric[static_cast<size_t>(i - 1)] = value_at_node(coeffs, i);
        exact[static_cast<size_t>(i - 1)] = problem.exact(grid.node(i), t);
    }
    return error_norms(numeric, exact, grid.h());
}

std::vector<double> observed_orders(std::span<const std::pair<double, double>> step_error) {
    if (step_error.size() < 2)
        throw std::invalid_argument("observed_orders: need at least two (step, error) pairs");
    for (size_t i = 0; i < step_error.size(); ++i) {
        if (!(step_error[i].first > 0.0))
            throw std::invalid_argument("observed_orders: steps must be positive");
        if (i > 0 && !(step_error[i].first < step_error[i - 1].first))
            throw std::invalid_argument("observed_orders: steps must decrease strictly");
        if (!(step_error[i].second > 0.0))
            throw std::domain_error("observed_orders: error " +
                                    std::to_string(step_error[i].second) +
                                    " is not positive; order undefined for exact reproduction");
    }
    std::vector<double> orders;
    orders.reserve(step_error.size() - 1);
    for (size_t i = 0; i + 1 < step_error.size(); ++i) {
        const double ratio_e = step_error[i].second / step_error[i + 1].second;
        const double ratio_s = step_error[i].first / step_error[i + 1].first;
        orders.push_back(std::log(ratio_e) / std::log(ratio_s));
    }
    return orders;
}

double observed_order(std::span<const std::pair<double, double>> step_error) {
    return observed_orders(step_error).back();
}

} // namespace telegraph
