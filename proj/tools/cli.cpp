#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "telegraph/norms.hpp"
#include "telegraph/problems.hpp"
#include "telegraph/scheme.hpp"

namespace telegraph_cli {

namespace {

using namespace telegraph;

struct ConfigError : std::runtime_error {
    ConfigError(std::string field_, const std::string& message)
        : std::runtime_error(field_ + ": " + message), field(std::move(field_)) {}
    std::string field;
};

struct RunConfig {
    std::string problem_name;
    ProblemOptions problem_options;
    int n_intervals = 0;
    double time_step = 0.0;
    double t_final = 0.0;
    std::string gamma; // "k", "2sin", "both"; empty picks a kind-dependent default
    std::vector<double> report_times;
    std::string out_path;
    std::string kind = "error-table";
    std::vector<std::pair<int, double>> schedule;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& field, const std::string& text) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, "cannot parse number '" + text + "'");
    }
}

std::vector<double> parse_time_list(const std::string& field, const std::string& text) {
    std::vector<double> times;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (!token.empty())
            times.push_back(parse_number(field, token));
    }
    return times;
}

std::vector<std::pair<int, double>> parse_schedule(const std::string& text) {
    std::vector<std::pair<int, double>> entries;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty())
            continue;
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw ConfigError("schedule", "entry '" + token + "' is not of the form N:k");
        const double n = parse_number("schedule", trim(token.substr(0, colon)));
        if (n < 5 || n != std::floor(n))
            throw ConfigError("schedule", "N in '" + token + "' must be an integer >= 5");
        entries.emplace_back(static_cast<int>(n), parse_number("schedule", trim(token.substr(colon + 1))));
    }
    return entries;
}

// Line-oriented key = value configuration with [problem], [scheme] and
// [output] sections; '#' starts a comment.
void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            if (section != "problem" && section != "scheme" && section != "output")
                throw ConfigError("config", "unknown section [" + section + "] at line " +
                                                std::to_string(lineno));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config", "expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string field = section + "." + key;
        if (section == "problem") {
            if (key == "name")
                cfg.problem_name = value;
            else if (key == "alpha")
                cfg.problem_options.alpha = parse_number(field, value);
            else if (key == "beta")
                cfg.problem_options.beta = parse_number(field, value);
            else if (key == "value")
                cfg.problem_options.value = parse_number(field, value);
            else if (key == "slope")
                cfg.problem_options.slope = parse_number(field, value);
            else
                throw ConfigError(field, "unknown key");
        } else if (section == "scheme") {
            if (key == "N")
                cfg.n_intervals = static_cast<int>(parse_number(field, value));
            else if (key == "k")
                cfg.time_step = parse_number(field, value);
            else if (key == "t_final")
                cfg.t_final = parse_number(field, value);
            else if (key == "gamma")
                cfg.gamma = value;
            else
                throw ConfigError(field, "unknown key");
        } else if (section == "output") {
            if (key == "kind")
                cfg.kind = value;
            else if (key == "path")
                cfg.out_path = value;
            else if (key == "report_times")
                cfg.report_times = parse_time_list(field, value);
            else if (key == "schedule")
                cfg.schedule = parse_schedule(value);
            else
                throw ConfigError(field, "unknown key");
        } else {
            throw ConfigError("config", "key '" + key + "' outside any section at line " +
                                            std::to_string(lineno));
        }
    }
}

std::vector<GammaChoice> gamma_choices(const std::string& name) {
    if (name == "k")
        return {GammaChoice::PlainK};
    if (name == "2sin")
        return {GammaChoice::TwoSinHalfK};
    if (name == "both")
        return {GammaChoice::PlainK, GammaChoice::TwoSinHalfK};
    throw ConfigError("gamma", "must be one of k, 2sin, both; got '" + name + "'");
}

void validate_scheme_fields(const RunConfig& cfg) {
    if (cfg.problem_name.empty())
        throw ConfigError("problem", "required (flag --problem or [problem] name)");
    if (cfg.n_intervals < 5)
        throw ConfigError("N", "must be an integer >= 5, got " + std::to_string(cfg.n_intervals));
    if (!(cfg.time_step > 0.0))
        throw ConfigError("k", "must be positive");
    if (!(cfg.t_final >= 2.0 * cfg.time_step))
        throw ConfigError("t-final", "must cover at least two steps of k");
    const double steps = cfg.t_final / cfg.time_step;
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw ConfigError("t-final", fmt(cfg.t_final) + " is not a whole number of steps of k = " +
                                         fmt(cfg.time_step));
    for (double t : cfg.report_times) {
        const double m = t / cfg.time_step;
        if (std::abs(m - std::round(m)) > 1e-9)
            throw ConfigError("report-times", fmt(t) + " is not a whole multiple of k = " +
                                                  fmt(cfg.time_step));
        if (t < 0.0 || t > cfg.t_final + 1e-12)
            throw ConfigError("report-times", fmt(t) + " outside [0, t-final]");
    }
}

std::ofstream open_output(const std::string& path) {
    if (path.empty())
        throw ConfigError("out", "required (flag --out or [output] path)");
    std::ofstream file(path);
    if (!file)
        throw ConfigError("out", "cannot open '" + path + "' for writing");
    return file;
}

void emit_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const std::string& w : warnings)
        err << "warning: " << w << "\n";
}

int command_run(const RunConfig& cfg, std::ostream& err) {
    validate_scheme_fields(cfg);
    if (cfg.kind != "error-table" && cfg.kind != "snapshot" && cfg.kind != "surface")
        throw ConfigError("kind", "must be error-table, snapshot or surface; got '" + cfg.kind +
                                      "'");
    const TelegraphProblem problem = make_problem(cfg.problem_name, cfg.problem_options);
    const std::vector<GammaChoice> gammas =
        gamma_choices(cfg.gamma.empty() ? (cfg.kind == "error-table" ? "both" : "k") : cfg.gamma);

    std::vector<double> times = cfg.report_times;
    if (times.empty() && cfg.kind != "surface")
        times = {cfg.t_final};

    if (cfg.kind == "error-table") {
        if (!problem.exact)
            throw ConfigError("kind", "error-table needs a problem with an exact solution");
        std::ofstream file = open_output(cfg.out_path);
        file << "t,gamma,N,k,linf,l2,rms\n";
        std::vector<SolveResult> results;
        for (GammaChoice g : gammas) {
            SchemeParams params{cfg.n_intervals, cfg.time_step, cfg.t_final, g};
            results.push_back(solve_to_time(problem, params, times));
            emit_warnings(results.back().warnings, err);
        }
        for (size_t ti = 0; ti < results.front().snapshots.size(); ++ti) {
            for (size_t gi = 0; gi < gammas.size(); ++gi) {
                const Snapshot& snap = results[gi].snapshots[ti];
                const ErrorReport report{snap.t, nodal_error_norms(problem, snap.coeffs, snap.t),
                                         cfg.n_intervals, cfg.time_step, gammas[gi]};
                file << fmt(report.t) << ',' << gamma_name(report.gamma) << ','
                     << report.n_intervals << ',' << fmt(report.k) << ','
                     << fmt(report.norms.l_inf) << ',' << fmt(report.norms.l2) << ','
                     << fmt(report.norms.rms) << '\n';
            }
        }
        return 0;
    }

    if (gammas.size() != 1)
        throw ConfigError("gamma", "pick one of k, 2sin for kind " + cfg.kind);
    SchemeParams params{cfg.n_intervals, cfg.time_step, cfg.t_final, gammas.front()};

    if (cfg.kind == "snapshot") {
        if (times.size() != 1)
            throw ConfigError("report-times", "snapshot needs exactly one report time");
        const SolveResult result = solve_to_time(problem, params, times);
        emit_warnings(result.warnings, err);
        const Snapshot& snap = result.snapshots.back();
        std::ofstream file = open_output(cfg.out_path);
        file << (problem.exact ? "x,numeric,exact,abs_error\n" : "x,numeric\n");
        const UniformGrid& grid = snap.coeffs.grid;
        for (int i = 0; i <= grid.n(); ++i) {
            const double x = grid.node(i);
            const double numeric = value_at_node(snap.coeffs, i);
            file << fmt(x) << ',' << fmt(numeric);
            if (problem.exact) {
                const double exact = problem.exact(x, snap.t);
                file << ',' << fmt(exact) << ',' << fmt(std::abs(numeric - exact));
            }
            file << '\n';
        }
        return 0;
    }

    // surface: every level unless a subset was requested
    const SolveResult result = solve_to_time(problem, params, cfg.report_times);
    emit_warnings(result.warnings, err);
    std::ofstream file = open_output(cfg.out_path);
    file << "x,t,numeric\n";
    for (const Snapshot& snap : result.snapshots) {
        const UniformGrid& grid = snap.coeffs.grid;
        for (int i = 0; i <= grid.n(); ++i)
            file << fmt(grid.node(i)) << ',' << fmt(snap.t) << ','
                 << fmt(value_at_node(snap.coeffs, i)) << '\n';
    }
    return 0;
}

int command_converge(const RunConfig& cfg, std::ostream& err) {
    if (cfg.schedule.size() < 2)
        throw ConfigError("schedule", "need at least two N:k entries");
    RunConfig probe = cfg;
    probe.n_intervals = cfg.schedule.front().first;
    probe.time_step = cfg.schedule.front().second;
    probe.report_times.clear();
    validate_scheme_fields(probe);

    const TelegraphProblem problem = make_problem(cfg.problem_name, cfg.problem_options);
    if (!problem.exact)
        throw ConfigError("problem", "convergence study needs an exact solution");
    const std::vector<GammaChoice> gammas =
        gamma_choices(cfg.gamma.empty() ? "k" : cfg.gamma);

    // Independent solves; results are assembled in schedule order.
    struct Entry {
        ErrorNorms norms;
        std::vector<std::string> warnings;
    };
    auto job = [&problem, &cfg](int n, double k, GammaChoice g) {
        const double steps = cfg.t_final / k;
        if (std::abs(steps - std::round(steps)) > 1e-9)
            throw ConfigError("schedule", "t-final is not a whole number of steps of k = " +
                                              fmt(k));
        SchemeParams params{n, k, cfg.t_final, g};
        const std::vector<double> times = {cfg.t_final};
        SolveResult result = solve_to_time(problem, params, times);
        return Entry{nodal_error_norms(problem, result.snapshots.back().coeffs, cfg.t_final),
                     std::move(result.warnings)};
    };
    std::vector<std::future<Entry>> futures;
    for (GammaChoice g : gammas)
        for (const auto& [n, k] : cfg.schedule)
            futures.push_back(std::async(std::launch::async, job, n, k, g));

    std::ofstream file = open_output(cfg.out_path);
    file << "N,h,k,gamma,linf,l2,rms,order_linf,order_l2\n";
    size_t index = 0;
    const double width = problem.b - problem.a;
    for (GammaChoice g : gammas) {
        std::optional<std::pair<std::pair<int, double>, ErrorNorms>> previous;
        for (const auto& entry : cfg.schedule) {
            const Entry job_result = futures[index++].get();
            emit_warnings(job_result.warnings, err);
            const ErrorNorms& norms = job_result.norms;
            std::string order_linf;
            std::string order_l2;
            if (previous) {
                const auto& [prev_entry, prev_norms] = *previous;
                // Order against h when the mesh changed, otherwise against k.
                const bool spatial = prev_entry.first != entry.first;
                const double s_prev =
                    spatial ? width / prev_entry.first : prev_entry.second;
                const double s_curr = spatial ? width / entry.first : entry.second;
                auto order_of = [&](double e_prev, double e_curr) -> std::string {
                    if (e_prev <= 1e-15 || e_curr <= 1e-15)
                        return "exact";
                    if (!(s_curr < s_prev))
                        return "";
                    const std::pair<double, double> pairs[] = {{s_prev, e_prev},
                                                               {s_curr, e_curr}};
                    return fmt(observed_order(pairs));
                };
                order_linf = order_of(prev_norms.l_inf, norms.l_inf);
                order_l2 = order_of(prev_norms.l2, norms.l2);
            }
            file << entry.first << ',' << fmt(width / entry.first) << ',' << fmt(entry.second)
                 << ',' << gamma_name(g) << ',' << fmt(norms.l_inf) << ',' << fmt(norms.l2)
                 << ',' << fmt(norms.rms) << ',' << order_linf << ',' << order_l2 << '\n';
            previous = {{entry, norms}};
        }
    }
    return 0;
}

int command_list(std::ostream& out) {
    for (const auto& [name, description] : problem_catalog())
        out << name << "  -  " << description << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quintic B-spline collocation solver for the 1-D telegraph equation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string problem;
    std::string gamma;
    std::string kind;
    std::string out_path;
    std::string report_times;
    std::string schedule;
    int n_intervals = 0;
    double time_step = 0.0;
    double t_final = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double value = 0.0;
    double slope = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "configuration file (key = value sections)");
        sub->add_option("--problem", problem, "problem name from the registry");
        sub->add_option("--N", n_intervals, "number of mesh intervals");
        sub->add_option("--k", time_step, "time step");
        sub->add_option("--t-final", t_final, "final time");
        sub->add_option("--gamma", gamma, "time-step surrogate: k, 2sin or both");
        sub->add_option("--out", out_path, "output CSV path");
        sub->add_option("--alpha", alpha, "problem parameter alpha (where configurable)");
        sub->add_option("--beta", beta, "problem parameter beta (where configurable)");
        sub->add_option("--value", value, "constant problem value");
        sub->add_option("--slope", slope, "linear problem slope");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "solve once and emit a CSV artifact");
    add_common(run_cmd);
    run_cmd->add_option("--report-times", report_times, "comma-separated report times");
    run_cmd->add_option("--kind", kind, "output kind: error-table, snapshot or surface");

    CLI::App* converge_cmd =
        app.add_subcommand("converge", "run an N:k refinement schedule and report orders");
    add_common(converge_cmd);
    converge_cmd->add_option("--schedule", schedule, "comma-separated N:k entries");

    app.add_subcommand("list-problems", "list the built-in problem registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (app.got_subcommand("list-problems"))
            return command_list(out);

        CLI::App* sub = app.got_subcommand("run") ? run_cmd : converge_cmd;
        if (sub->count("--config"))
            apply_config_file(config_path, cfg);
        if (sub->count("--problem"))
            cfg.problem_name = problem;
        if (sub->count("--N"))
            cfg.n_intervals = n_intervals;
        if (sub->count("--k"))
            cfg.time_step = time_step;
        if (sub->count("--t-final"))
            cfg.t_final = t_final;
        if (sub->count("--gamma"))
            cfg.gamma = gamma;
        if (sub->count("--out"))
            cfg.out_path = out_path;
        if (sub->count("--alpha"))
            cfg.problem_options.alpha = alpha;
        if (sub->count("--beta"))
            cfg.problem_options.beta = beta;
        if (sub->count("--value"))
            cfg.problem_options.value = value;
        if (sub->count("--slope"))
            cfg.problem_options.slope = slope;

        if (app.got_subcommand("run")) {
            if (run_cmd->count("--report-times"))
                cfg.report_times = parse_time_list("report-times", report_times);
            if (run_cmd->count("--kind"))
                cfg.kind = kind;
            return command_run(cfg, err);
        }
        if (converge_cmd->count("--schedule"))
            cfg.schedule = parse_schedule(schedule);
        return command_converge(cfg, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("telegraph");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace telegraph_cli
