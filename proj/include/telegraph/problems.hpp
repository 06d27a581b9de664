#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telegraph/problem.hpp"

namespace telegraph {

// Knobs accepted by the built-in problems.  alpha/beta apply where a problem
// leaves them free; value/slope parameterize the manufactured templates.
struct ProblemOptions {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> value;
    std::optional<double> slope;
};

// Built-in registry: example1, example2, example3 (the benchmark problems
// with known exact solutions) plus the manufactured templates zero,
// constant, linear.  Throws std::invalid_argument for unknown names or
// options a problem does not accept.
TelegraphProblem make_problem(std::string_view name, const ProblemOptions& options = {});

std::vector<std::pair<std::string, std::string>> problem_catalog();

} // namespace telegraph
