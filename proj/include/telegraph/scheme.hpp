#pragma once

#include <span>
#include <string>
#include <vector>

#include "telegraph/banded.hpp"
#include "telegraph/grid.hpp"
#include "telegraph/problem.hpp"
#include "telegraph/spline.hpp"

namespace telegraph {

// Per-run constants of the difference scheme.  value_weight and
// curvature_weight multiply the new level's nodal value and curvature;
// outer/inner/center are the resulting pentadiagonal row entries.
struct SchemeWeights {
    double value_weight;     // 1 + alpha * gamma
    double curvature_weight; // -gamma^2 / 2
    double outer;
    double inner;
    double center;
};

SchemeWeights scheme_weights(double alpha, double gamma_k, double h);

// The (N+1)-square collocation matrix: pentadiagonal with the ghost
// coefficients eliminated into the first and last two rows.  Unfactored.
BandedSystem build_collocation_matrix(int n_intervals, const SchemeWeights& w);

// Nodal solution values at t = k from the Taylor expansion of the initial
// data, using u_tt(x,0) recovered from the equation itself.
std::vector<double> startup_values(const TelegraphProblem& problem, double k,
                                   const UniformGrid& grid);

// Two consecutive coefficient levels; all the history the scheme keeps.
struct TimeState {
    TimeState(SplineCoefficients prev_, SplineCoefficients curr_);
    int level() const { return curr.time_level; }
    SplineCoefficients prev;
    SplineCoefficients curr;
};

// Right-hand side for the solve advancing `state` one level: the history
// term at every node plus the boundary-data couplings in rows 0,1,N-1,N.
std::vector<double> assemble_rhs(const TelegraphProblem& problem, const SchemeWeights& w,
                                 double gamma_k, double k, const TimeState& state,
                                 const UniformGrid& grid);

// Completes a solved interior vector c_0..c_N into a full coefficient set by
// filling the four ghosts from the boundary data at the same time level.
SplineCoefficients recover_ghost_coefficients(const UniformGrid& grid,
                                              std::span<const double> interior, double g0,
                                              double g1, double g2, double g3, int time_level);

// One full time march, set up once and advanced step by step.
class CollocationScheme {
public:
    CollocationScheme(TelegraphProblem problem, SchemeParams params);

    const UniformGrid& grid() const { return grid_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Levels 0 and 1: interpolants of the initial data and of the Taylor
    // start-up values, with the boundary slopes as end conditions.
    TimeState initial_state() const;

    TimeState advance(const TimeState& state) const;

private:
    TelegraphProblem problem_;
    SchemeParams params_;
    UniformGrid grid_;
    double gamma_k_;
    SchemeWeights weights_;
    BandedSystem matrix_;
    std::vector<std::string> warnings_;
};

struct Snapshot {
    double t;
    SplineCoefficients coeffs;
};

struct SolveResult {
    std::vector<Snapshot> snapshots;
    std::vector<std::string> warnings;
};

// Marches to t_final and returns the requested snapshots (every level when
// `report_times` is empty).  Each report time must be a whole multiple of
// the time step (tolerance 1e-9) and at most t_final; t_final must cover at
// least two steps.
SolveResult solve_to_time(const TelegraphProblem& problem, const SchemeParams& params,
                          std::span<const double> report_times = {});

} // namespace telegraph
