#include "telegraph/scheme.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "telegraph/boundary.hpp"
#include "telegraph/quintic_basis.hpp"

namespace telegraph {

double effective_time_step(double k, GammaChoice choice) {
    if (!(k > 0.0))
        throw std::invalid_argument("effective_time_step: k must be positive");
    return choice == GammaChoice::PlainK ? k : 2.0 * std::sin(k / 2.0);
}

const char* gamma_name(GammaChoice choice) {
    return choice == GammaChoice::PlainK ? "k" : "2sin";
}

namespace {

double derivative_at(const std::function<double(double)>& f, double x, double direction) {
    // One-sided five-term difference staying inside the domain.
    const double d = direction;
    return (-137.0 / 60.0 * f(x) + 5.0 * f(x + d) - 5.0 * f(x + 2.0 * d) +
            10.0 / 3.0 * f(x + 3.0 * d) - 5.0 / 4.0 * f(x + 4.0 * d) + 1.0 / 5.0 * f(x + 5.0 * d)) /
           d;
}

} // namespace

void validate_problem(const TelegraphProblem& problem) {
    if (!(problem.b > problem.a))
        throw std::invalid_argument("problem: need b > a");
    if (!problem.forcing || !problem.initial_value || !problem.initial_velocity ||
        !problem.initial_value_xx || !problem.dirichlet_left || !problem.dirichlet_right ||
        !problem.neumann_left || !problem.neumann_right)
        throw std::invalid_argument("problem: all data functions must be set");

    const double f0a = problem.initial_value(problem.a);
    const double f0b = problem.initial_value(problem.b);
    const double g00 = problem.dirichlet_left(0.0);
    const double g10 = problem.dirichlet_right(0.0);
    if (std::abs(f0a - g00) > 1e-9 * (1.0 + std::abs(g00)))
        throw std::invalid_argument("problem: f0(a) = " + std::to_string(f0a) +
                                    " disagrees with g0(0) = " + std::to_string(g00));
    if (std::abs(f0b - g10) > 1e-9 * (1.0 + std::abs(g10)))
        throw std::invalid_argument("problem: f0(b) = " + std::to_string(f0b) +
                                    " disagrees with g1(0) = " + std::to_string(g10));

    const double step = (problem.b - problem.a) / 100.0;
    const double fpa = derivative_at(problem.initial_value, problem.a, step);
    const double fpb = derivative_at(problem.initial_value, problem.b, -step);
    const double g20 = problem.neumann_left(0.0);
    const double g30 = problem.neumann_right(0.0);
    if (std::abs(fpa - g20) > 1e-6 * (1.0 + std::abs(g20)))
        throw std::invalid_argument("problem: f0'(a) ~ " + std::to_string(fpa) +
                                    " disagrees with g2(0) = " + std::to_string(g20));
    if (std::abs(fpb - g30) > 1e-6 * (1.0 + std::abs(g30)))
        throw std::invalid_argument("problem: f0'(b) ~ " + std::to_string(fpb) +
                                    " disagrees with g3(0) = " + std::to_string(g30));
}

SchemeWeights scheme_weights(double alpha, double gamma_k, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("scheme_weights: h must be positive");
    SchemeWeights w;
    w.value_weight = 1.0 + alpha * gamma_k;
    w.curvature_weight = -gamma_k * gamma_k / 2.0;
    const double q = w.curvature_weight / (h * h);
    w.outer = w.value_weight + 20.0 * q;
    w.inner = 26.0 * w.value_weight + 40.0 * q;
    w.center = 66.0 * w.value_weight - 120.0 * q;
    return w;
}

BandedSystem build_collocation_matrix(int n_intervals, const SchemeWeights& w) {
    const int n = n_intervals;
    if (n < 5)
        throw std::invalid_argument("build_collocation_matrix: need N >= 5");
    BandedSystem sys(n + 1, 2, 2);
    const EdgeRows rows = eliminated_edge_rows(w.outer, w.inner, w.center);
    for (int m = 0; m < 3; ++m) {
        sys.set(0, m, rows.corner[static_cast<size_t>(m)]);
        sys.set(n, n - m, rows.corner[static_cast<size_t>(m)]);
    }
    for (int m = 0; m < 4; ++m) {
        sys.set(1, m, rows.adjacent[static_cast<size_t>(m)]);
        sys.set(n - 1, n - m, rows.adjacent[static_cast<size_t>(m)]);
    }
    const double penta[5] = {w.outer, w.inner, w.center, w.inner, w.outer};
    for (int i = 2; i <= n - 2; ++i)
        for (int m = 0; m < 5; ++m)
            sys.set(i, i - 2 + m, penta[m]);
    return sys;
}

std::vector<double> startup_values(const TelegraphProblem& problem, double k,
                                   const UniformGrid& grid) {
    if (!(k > 0.0))
        throw std::invalid_argument("startup_values: k must be positive");
    std::vector<double> u(static_cast<size_t>(grid.n()) + 1);
    for (int i = 0; i <= grid.n(); ++i) {
        const double x = grid.node(i);
        const double f0 = problem.initial_value(x);
        const double f1 = problem.initial_velocity(x);
        // u_tt(x,0) recovered from the equation at t = 0.
        const double u_tt = problem.forcing(x, 0.0) - problem.beta * problem.beta * f0 -
                            2.0 * problem.alpha * f1 + problem.initial_value_xx(x);
        u[static_cast<size_t>(i)] = f0 + k * f1 + 0.5 * k * k * u_tt;
    }
    return u;
}

TimeState::TimeState(SplineCoefficients prev_, SplineCoefficients curr_)
    : prev(std::move(prev_)), curr(std::move(curr_)) {
    if (prev.time_level + 1 != curr.time_level)
        throw std::invalid_argument("TimeState: levels must be consecutive, got " +
                                    std::to_string(prev.time_level) + " and " +
                                    std::to_string(curr.time_level));
}

std::vector<double> assemble_rhs(const TelegraphProblem& problem, const SchemeWeights& w,
                                 double gamma_k, double k, const TimeState& state,
                                 const UniformGrid& grid) {
    const int n = grid.n();
    const double g2 = gamma_k * gamma_k;
    const double beta_g = problem.beta * gamma_k;
    const double value_curr = 2.0 - beta_g * beta_g;
    const double value_prev = problem.alpha * gamma_k - 1.0;
    const double t_n = state.curr.time_level * k;
    const double t_next = t_n + k;

    std::vector<double> q(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        q[static_cast<size_t>(i)] = value_curr * value_at_node(state.curr, i) +
                                    value_prev * value_at_node(state.prev, i) +
                                    0.5 * g2 * second_derivative_at_node(state.prev, i) +
                                    g2 * problem.forcing(grid.node(i), t_n);
    }

    const EdgeCouplings cpl = eliminated_edge_couplings(w.outer, w.inner, grid.h());
    const double g0 = problem.dirichlet_left(t_next);
    const double g1 = problem.dirichlet_right(t_next);
    const double gl = problem.neumann_left(t_next);
    const double gr = problem.neumann_right(t_next);
    q[0] += cpl.corner_value * g0 + cpl.corner_slope * gl;
    q[1] += cpl.adjacent_value * g0 + cpl.adjacent_slope * gl;
    q[static_cast<size_t>(n - 1)] += cpl.adjacent_value * g1 - cpl.adjacent_slope * gr;
    q[static_cast<size_t>(n)] += cpl.corner_value * g1 - cpl.corner_slope * gr;
    return q;
}

SplineCoefficients recover_ghost_coefficients(const UniformGrid& grid,
                                              std::span<const double> interior, double g0,
                                              double g1, double g2, double g3, int time_level) {
    const int n = grid.n();
    if (static_cast<int>(interior.size()) != n + 1)
        throw std::invalid_argument("recover_ghost_coefficients: need N+1 interior values");
    std::vector<double> c(static_cast<size_t>(n) + 5);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i + 2)] = interior[static_cast<size_t>(i)];
    const GhostPair left = left_ghosts(interior[0], interior[1], interior[2], g0, g2, grid.h());
    const GhostPair right =
        right_ghosts(interior[static_cast<size_t>(n)], interior[static_cast<size_t>(n - 1)],
                     interior[static_cast<size_t>(n - 2)], g1, g3, grid.h());
    c[1] = left.adjacent;
    c[0] = left.outer;
    c[static_cast<size_t>(n + 3)] = right.adjacent;
    c[static_cast<size_t>(n + 4)] = right.outer;
    return SplineCoefficients(grid, std::move(c), time_level);
}

CollocationScheme::CollocationScheme(TelegraphProblem problem, SchemeParams params)
    : problem_(std::move(problem)), params_(params),
      grid_(problem_.a, problem_.b, params.n_intervals),
      gamma_k_(effective_time_step(params.time_step, params.gamma)),
      weights_(scheme_weights(problem_.alpha, gamma_k_, grid_.h())),
      matrix_(build_collocation_matrix(params.n_intervals, weights_)) {
    validate_problem(problem_);
    if (!(params.time_step <= params.t_final))
        throw std::invalid_argument("params: time_step must not exceed t_final");
    const double steps = params.t_final / params.time_step;
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw std::invalid_argument("params: t_final / time_step = " + std::to_string(steps) +
                                    " is not a whole number of steps");
    if (weights_.value_weight <= 0.0)
        warnings_.push_back("value weight 1 + alpha*gamma = " +
                            std::to_string(weights_.value_weight) +
                            " is not positive; the scheme is outside its tested regime");
    matrix_.factor();
}

TimeState CollocationScheme::initial_state() const {
    const double k = params_.time_step;
    std::vector<double> v0(static_cast<size_t>(grid_.n()) + 1);
    for (int i = 0; i <= grid_.n(); ++i)
        v0[static_cast<size_t>(i)] = problem_.initial_value(grid_.node(i));
    SplineCoefficients c0 =
        fit_interpolant(grid_, v0, problem_.neumann_left(0.0), problem_.neumann_right(0.0));
    c0.time_level = 0;

    const std::vector<double> v1 = startup_values(problem_, k, grid_);
    SplineCoefficients c1 =
        fit_interpolant(grid_, v1, problem_.neumann_left(k), problem_.neumann_right(k));
    c1.time_level = 1;
    return TimeState(std::move(c0), std::move(c1));
}

TimeState CollocationScheme::advance(const TimeState& state) const {
    const std::vector<double> q =
        assemble_rhs(problem_, weights_, gamma_k_, params_.time_step, state, grid_);
    const std::vector<double> interior = matrix_.solve(q);
    const double t_next = (state.curr.time_level + 1) * params_.time_step;
    SplineCoefficients next = recover_ghost_coefficients(
        grid_, interior, problem_.dirichlet_left(t_next), problem_.dirichlet_right(t_next),
        problem_.neumann_left(t_next), problem_.neumann_right(t_next),
        state.curr.time_level + 1);
    return TimeState(state.curr, std::move(next));
}

SolveResult solve_to_time(const TelegraphProblem& problem, const SchemeParams& params,
                          std::span<const double> report_times) {
    CollocationScheme scheme(problem, params);
    const double k = params.time_step;
    const long steps = std::lround(params.t_final / k);
    if (steps < 2)
        throw std::invalid_argument("params: t_final = " + std::to_string(params.t_final) +
                                    " must cover at least two steps of k = " + std::to_string(k));

    std::vector<char> wanted(static_cast<size_t>(steps) + 1, report_times.empty() ? 1 : 0);
    for (double t : report_times) {
        const long level = std::lround(t / k);
        if (std::abs(t - static_cast<double>(level) * k) > 1e-9)
            throw std::invalid_argument("report time " + std::to_string(t) +
                                        " is not a whole multiple of time_step " +
                                        std::to_string(k));
        if (level < 0 || level > steps)
            throw std::invalid_argument("report time " + std::to_string(t) +
                                        " outside [0, t_final]");
        wanted[static_cast<size_t>(level)] = 1;
    }

    SolveResult result;
    result.warnings = scheme.warnings();
    TimeState state = scheme.initial_state();
    if (wanted[0])
        result.snapshots.push_back({0.0, state.prev});
    if (wanted[1])
        result.snapshots.push_back({k, state.curr});
    for (long level = 2; level <= steps; ++level) {
        state = scheme.advance(state);
        if (wanted[static_cast<size_t>(level)])
            result.snapshots.push_back({static_cast<double>(level) * k, state.curr});
    }
    return result;
}

} // namespace telegraph
