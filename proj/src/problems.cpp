#include "telegraph/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace telegraph {

namespace {

constexpr double pi = std::numbers::pi;

void reject(const ProblemOptions& o, std::string_view name, bool allow_alpha_beta,
            bool allow_value, bool allow_slope) {
    if (!allow_alpha_beta && (o.alpha || o.beta))
        throw std::invalid_argument(std::string("problem '") + std::string(name) +
                                    "' has fixed alpha and beta");
    if (!allow_value && o.value)
        throw std::invalid_argument("option 'value' only applies to the constant problem");
    if (!allow_slope && o.slope)
        throw std::invalid_argument("option 'slope' only applies to the linear problem");
}

TelegraphProblem example1(const ProblemOptions& o) {
    reject(o, "example1", false, false, false);
    TelegraphProblem p;
    p.name = "example1";
    p.description = "u = sin(pi t) sin(pi x) on [0,1], alpha = beta = pi";
    p.alpha = pi;
    p.beta = pi;
    p.a = 0.0;
    p.b = 1.0;
    p.forcing = [](double x, double t) {
        return pi * pi * std::sin(pi * x) * (std::sin(pi * t) + 2.0 * std::cos(pi * t));
    };
    p.exact = [](double x, double t) { return std::sin(pi * t) * std::sin(pi * x); };
    p.initial_value = [](double) { return 0.0; };
    p.initial_velocity = [](double x) { return pi * std::sin(pi * x); };
    p.initial_value_xx = [](double) { return 0.0; };
    p.dirichlet_left = [](double) { return 0.0; };
    p.dirichlet_right = [](double t) { return std::sin(pi * t) * std::sin(pi); };
    p.neumann_left = [](double t) { return pi * std::sin(pi * t); };
    p.neumann_right = [](double t) { return pi * std::sin(pi * t) * std::cos(pi); };
    return p;
}

TelegraphProblem example2(const ProblemOptions& o) {
    reject(o, "example2", true, false, false);
    TelegraphProblem p;
    p.name = "example2";
    p.description = "u = exp(-2t) sinh(x) on [0,1], alpha/beta configurable (defaults 20, 10)";
    p.alpha = o.alpha.value_or(20.0);
    p.beta = o.beta.value_or(10.0);
    p.a = 0.0;
    p.b = 1.0;
    const double fc = 3.0 - 4.0 * p.alpha + p.beta * p.beta;
    p.forcing = [fc](double x, double t) { return fc * std::exp(-2.0 * t) * std::sinh(x); };
    p.exact = [](double x, double t) { return std::exp(-2.0 * t) * std::sinh(x); };
    p.initial_value = [](double x) { return std::sinh(x); };
    p.initial_velocity = [](double x) { return -2.0 * std::sinh(x); };
    p.initial_value_xx = [](double x) { return std::sinh(x); };
    p.dirichlet_left = [](double) { return 0.0; };
    p.dirichlet_right = [](double t) { return std::exp(-2.0 * t) * std::sinh(1.0); };
    p.neumann_left = [](double t) { return std::exp(-2.0 * t); };
    p.neumann_right = [](double t) { return std::exp(-2.0 * t) * std::cosh(1.0); };
    return p;
}

TelegraphProblem example3(const ProblemOptions& o) {
    reject(o, "example3", false, false, false);
    TelegraphProblem p;
    p.name = "example3";
    p.description = "u = cos(t) sin(x) on [0,1], alpha = 10, beta = 5";
    p.alpha = 10.0;
    p.beta = 5.0;
    p.a = 0.0;
    p.b = 1.0;
    const double alpha = p.alpha;
    const double beta2 = p.beta * p.beta;
    p.forcing = [alpha, beta2](double x, double t) {
        return -2.0 * alpha * std::sin(t) * std::sin(x) + beta2 * std::cos(t) * std::sin(x);
    };
    p.exact = [](double x, double t) { return std::cos(t) * std::sin(x); };
    p.initial_value = [](double x) { return std::sin(x); };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_value_xx = [](double x) { return -std::sin(x); };
    p.dirichlet_left = [](double) { return 0.0; };
    p.dirichlet_right = [](double t) { return std::cos(t) * std::sin(1.0); };
    p.neumann_left = [](double t) { return std::cos(t); };
    p.neumann_right = [](double t) { return std::cos(t) * std::cos(1.0); };
    return p;
}

TelegraphProblem zero_problem(const ProblemOptions& o) {
    reject(o, "zero", true, false, false);
    TelegraphProblem p;
    p.name = "zero";
    p.description = "identically zero solution";
    p.alpha = o.alpha.value_or(1.0);
    p.beta = o.beta.value_or(1.0);
    p.a = 0.0;
    p.b = 1.0;
    p.forcing = [](double, double) { return 0.0; };
    p.exact = [](double, double) { return 0.0; };
    p.initial_value = [](double) { return 0.0; };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_value_xx = [](double) { return 0.0; };
    p.dirichlet_left = [](double) { return 0.0; };
    p.dirichlet_right = [](double) { return 0.0; };
    p.neumann_left = [](double) { return 0.0; };
    p.neumann_right = [](double) { return 0.0; };
    return p;
}

TelegraphProblem constant_problem(const ProblemOptions& o) {
    reject(o, "constant", true, true, false);
    TelegraphProblem p;
    p.name = "constant";
    p.description = "manufactured u = C (option 'value', default 1)";
    p.alpha = o.alpha.value_or(1.0);
    p.beta = o.beta.value_or(1.0);
    p.a = 0.0;
    p.b = 1.0;
    const double c = o.value.value_or(1.0);
    const double beta2 = p.beta * p.beta;
    p.forcing = [c, beta2](double, double) { return beta2 * c; };
    p.exact = [c](double, double) { return c; };
    p.initial_value = [c](double) { return c; };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_value_xx = [](double) { return 0.0; };
    p.dirichlet_left = [c](double) { return c; };
    p.dirichlet_right = [c](double) { return c; };
    p.neumann_left = [](double) { return 0.0; };
    p.neumann_right = [](double) { return 0.0; };
    return p;
}

TelegraphProblem linear_problem(const ProblemOptions& o) {
    reject(o, "linear", true, false, true);
    TelegraphProblem p;
    p.name = "linear";
    p.description = "manufactured u = C*x (option 'slope', default 1)";
    p.alpha = o.alpha.value_or(1.0);
    p.beta = o.beta.value_or(1.0);
    p.a = 0.0;
    p.b = 1.0;
    const double s = o.slope.value_or(1.0);
    const double beta2 = p.beta * p.beta;
    p.forcing = [s, beta2](double x, double) { return beta2 * s * x; };
    p.exact = [s](double x, double) { return s * x; };
    p.initial_value = [s](double x) { return s * x; };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_value_xx = [](double) { return 0.0; };
    p.dirichlet_left = [](double) { return 0.0; };
    p.dirichlet_right = [s](double) { return s; };
    p.neumann_left = [s](double) { return s; };
    p.neumann_right = [s](double) { return s; };
    return p;
}

} // namespace

TelegraphProblem make_problem(std::string_view name, const ProblemOptions& options) {
    if (name == "example1")
        return example1(options);
    if (name == "example2")
        return example2(options);
    if (name == "example3")
        return example3(options);
    if (name == "zero")
        return zero_problem(options);
    if (name == "constant")
        return constant_problem(options);
    if (name == "linear")
        return linear_problem(options);
    throw std::invalid_argument("unknown problem '" + std::string(name) +
                                "'; see list-problems for the registry");
}

std::vector<std::pair<std::string, std::string>> problem_catalog() {
    std::vector<std::pair<std::string, std::string>> entries;
    for (const char* name : {"example1", "example2", "example3", "zero", "constant", "linear"}) {
        const TelegraphProblem p = make_problem(name, {});
        entries.emplace_back(p.name, p.description);
    }
    return entries;
}

} // namespace telegraph
