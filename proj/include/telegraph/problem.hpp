#pragma once

#include <functional>
#include <string>

namespace telegraph {

// u_tt + 2*alpha*u_t + beta^2*u = u_xx + f(x,t)  on [a,b], t >= 0, with
// initial displacement/velocity and Dirichlet + Neumann data at both ends.
struct TelegraphProblem {
    double alpha = 0.0;
    double beta = 0.0;
    double a = 0.0;
    double b = 1.0;

    std::function<double(double, double)> forcing;    // f(x,t)
    std::function<double(double)> initial_value;      // u(x,0)
    std::function<double(double)> initial_velocity;   // u_t(x,0)
    std::function<double(double)> initial_value_xx;   // u_xx(x,0), used by the start-up level
    std::function<double(double)> dirichlet_left;     // u(a,t)
    std::function<double(double)> dirichlet_right;    // u(b,t)
    std::function<double(double)> neumann_left;       // u_x(a,t)
    std::function<double(double)> neumann_right;      // u_x(b,t)

    std::function<double(double, double)> exact; // optional, for error reporting

    std::string name;
    std::string description;
};

// Checks that all pieces are present and the data agree at the domain
// corners (values to 1e-9, slopes to 1e-6).  Throws std::invalid_argument
// naming the offending field.
void validate_problem(const TelegraphProblem& problem);

enum class GammaChoice { PlainK, TwoSinHalfK };

// The time-step surrogate: k itself, or 2*sin(k/2).
double effective_time_step(double k, GammaChoice choice);

const char* gamma_name(GammaChoice choice); // "k" / "2sin"

struct SchemeParams {
    int n_intervals = 0;  // N
    double time_step = 0; // k
    double t_final = 0;
    GammaChoice gamma = GammaChoice::PlainK;
};

} // namespace telegraph
