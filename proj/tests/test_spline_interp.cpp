#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "telegraph/spline.hpp"

using namespace telegraph;

namespace {

constexpr double pi = std::numbers::pi;

double max_error(const SplineCoefficients& s, int order, double (*f)(double), int samples) {
    const UniformGrid& g = s.grid;
    double worst = 0.0;
    for (int m = 0; m <= samples; ++m) {
        const double x = g.a() + (g.b() - g.a()) * m / samples;
        worst = std::max(worst, std::abs(eval_spline(s, x, order) - f(x)));
    }
    return worst;
}

} // namespace

TEST_CASE("nodal evaluation of simple coefficient patterns") {
    const UniformGrid grid(0.0, 1.0, 10);
    const double h = grid.h();

    SplineCoefficients ones(grid, std::vector<double>(15, 1.0), 0);
    for (int j = 0; j <= grid.n(); ++j) {
        CHECK(value_at_node(ones, j) == 120.0);
        CHECK(eval_spline(ones, grid.node(j), 0) == doctest::Approx(120.0).epsilon(1e-13));
        CHECK(first_derivative_at_node(ones, j) == 0.0);
    }

    SplineCoefficients zeros(grid, std::vector<double>(15, 0.0), 0);
    CHECK(eval_spline(zeros, 0.37, 0) == 0.0);
    CHECK(eval_spline(zeros, 0.37, 1) == 0.0);
    CHECK(eval_spline(zeros, 1.0, 2) == 0.0);

    std::vector<double> unit(15, 0.0);
    unit[5 + 2] = 1.0; // c_5
    SplineCoefficients spike(grid, std::move(unit), 0);
    CHECK(second_derivative_at_node(spike, 5) == doctest::Approx(-120.0 / (h * h)));
    CHECK(value_at_node(spike, 5) == 66.0);
}

TEST_CASE("spline evaluation at nodes agrees with the stencil path") {
    const UniformGrid grid(-0.5, 1.5, 9);
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::vector<double> c(static_cast<size_t>(grid.n()) + 5);
    for (double& v : c)
        v = uni(rng);
    const SplineCoefficients s(grid, std::move(c), 0);
    for (int j = 0; j <= grid.n(); ++j) {
        const double x = grid.node(j);
        CHECK(std::abs(eval_spline(s, x, 0) - value_at_node(s, j)) <=
              1e-12 * (1.0 + std::abs(value_at_node(s, j))));
        CHECK(std::abs(eval_spline(s, x, 1) - first_derivative_at_node(s, j)) <=
              1e-12 * (1.0 + std::abs(first_derivative_at_node(s, j))));
        CHECK(std::abs(eval_spline(s, x, 2) - second_derivative_at_node(s, j)) <=
              1e-10 * (1.0 + std::abs(second_derivative_at_node(s, j))));
    }
}

TEST_CASE("fitting a constant gives uniform coefficients 1/120") {
    const UniformGrid grid(0.0, 1.0, 12);
    const std::vector<double> values(13, 1.0);
    const SplineCoefficients s = fit_interpolant(grid, values, 0.0, 0.0);
    for (int i = -2; i <= grid.n() + 2; ++i)
        CHECK(s.at(i) == doctest::Approx(1.0 / 120.0).epsilon(1e-12));
    for (double x : {0.0, 0.31, 0.77, 1.0})
        CHECK(eval_spline(s, x, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fitting linear data reproduces the line") {
    const UniformGrid grid(0.0, 1.0, 10);
    std::vector<double> values(11);
    for (int i = 0; i <= 10; ++i)
        values[static_cast<size_t>(i)] = grid.node(i);
    const SplineCoefficients s = fit_interpolant(grid, values, 1.0, 1.0);
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = uni(rng);
        CHECK(std::abs(eval_spline(s, x, 0) - x) <= 1e-10);
    }
    CHECK(eval_spline(s, 0.0, 1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eval_spline(s, 1.0, 1) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quartic polynomials are reproduced exactly") {
    auto f = [](double x) { return 3.0 * x * x * x * x - 2.0 * x * x * x + x - 5.0; };
    auto fp = [](double x) { return 12.0 * x * x * x - 6.0 * x * x + 1.0; };
    const UniformGrid grid(0.0, 2.0, 9);
    std::vector<double> values(10);
    for (int i = 0; i <= 9; ++i)
        values[static_cast<size_t>(i)] = f(grid.node(i));
    const SplineCoefficients s = fit_interpolant(grid, values, fp(0.0), fp(2.0));
    std::mt19937 rng(3u);
    std::uniform_real_distribution<double> uni(0.0, 2.0);
    double scale = 0.0;
    for (int i = 0; i <= 9; ++i)
        scale = std::max(scale, std::abs(values[static_cast<size_t>(i)]));
    for (int trial = 0; trial < 200; ++trial) {
        const double x = uni(rng);
        CHECK(std::abs(eval_spline(s, x, 0) - f(x)) <= 1e-9 * scale);
    }
}

TEST_CASE("fit interpolates the data and the end slopes") {
    const UniformGrid grid(0.0, 1.0, 8);
    std::mt19937 rng(77u);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    std::vector<double> values(9);
    for (double& v : values)
        v = uni(rng);
    const double d_left = uni(rng);
    const double d_right = uni(rng);
    const SplineCoefficients s = fit_interpolant(grid, values, d_left, d_right);
    double scale = 1.0;
    for (double v : values)
        scale = std::max(scale, std::abs(v));
    for (int i = 0; i <= grid.n(); ++i)
        CHECK(std::abs(value_at_node(s, i) - values[static_cast<size_t>(i)]) <= 1e-10 * scale);
    CHECK(std::abs(eval_spline(s, grid.a(), 1) - d_left) <= 1e-10 * scale);
    CHECK(std::abs(eval_spline(s, grid.b(), 1) - d_right) <= 1e-10 * scale);
}

TEST_CASE("halving h cuts the sin(pi x) interpolation error by about 2^4 or better") {
    auto f = [](double x) { return std::sin(pi * x); };
    auto fp = [](double x) { return pi * std::cos(pi * x); };
    double err[2];
    int idx = 0;
    for (int n : {20, 40}) {
        const UniformGrid grid(0.0, 1.0, n);
        std::vector<double> values(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            values[static_cast<size_t>(i)] = f(grid.node(i));
        const SplineCoefficients s = fit_interpolant(grid, values, fp(0.0), fp(1.0));
        double worst = 0.0;
        for (int m = 0; m <= 2000; ++m) {
            const double x = m / 2000.0;
            worst = std::max(worst, std::abs(eval_spline(s, x, 0) - f(x)));
        }
        err[idx++] = worst;
    }
    CHECK(err[0] / err[1] >= 16.0 * 0.9);
}

TEST_CASE("observed interpolation orders for a smooth function") {
    // f itself, then first and second derivatives; expected orders are at
    // least 4, 3 and 2 under h -> h/2 (with slack 0.2).
    static double (*const fs[3])(double) = {
        [](double x) { return std::sin(2.0 * x); },
        [](double x) { return 2.0 * std::cos(2.0 * x); },
        [](double x) { return -4.0 * std::sin(2.0 * x); },
    };
    double errs[2][3];
    int idx = 0;
    for (int n : {20, 40}) {
        const UniformGrid grid(0.0, 1.0, n);
        std::vector<double> values(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            values[static_cast<size_t>(i)] = fs[0](grid.node(i));
        const SplineCoefficients s = fit_interpolant(grid, values, fs[1](0.0), fs[1](1.0));
        for (int order = 0; order <= 2; ++order)
            errs[idx][order] = max_error(s, order, fs[order], 1500);
        ++idx;
    }
    for (int order = 0; order <= 2; ++order) {
        const double observed = std::log2(errs[0][order] / errs[1][order]);
        CHECK(observed >= 4.0 - order - 0.2);
    }
}

TEST_CASE("argument validation") {
    const UniformGrid grid(0.0, 1.0, 10);
    CHECK_THROWS_AS(fit_interpolant(grid, std::vector<double>(10, 0.0), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(SplineCoefficients(grid, std::vector<double>(14, 0.0), 0),
                    std::invalid_argument);
    const SplineCoefficients s(grid, std::vector<double>(15, 0.0), 0);
    CHECK_THROWS_AS(eval_spline(s, -0.2, 0), std::domain_error);
    CHECK_THROWS_AS(eval_spline(s, 1.2, 0), std::domain_error);
    std::vector<double> bad(15, 0.0);
    bad[3] = std::nan("");
    CHECK_THROWS_AS(SplineCoefficients(grid, std::move(bad), 0), std::invalid_argument);
}
