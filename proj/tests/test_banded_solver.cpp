#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "support.hpp"
#include "telegraph/banded.hpp"

using namespace telegraph;
using namespace testsupport;

TEST_CASE("identity system returns the right-hand side") {
    BandedSystem sys(5, 2, 2);
    for (int i = 0; i < 5; ++i)
        sys.set(i, i, 1.0);
    sys.factor();
    const std::vector<double> rhs = {3.0, -1.0, 0.5, 2.0, 7.0};
    CHECK(sys.solve(rhs) == rhs);
}

TEST_CASE("entries outside the band are rejected with their position") {
    BandedSystem sys(6, 2, 2);
    CHECK_THROWS_AS(sys.set(0, 3, 1.0), BandwidthError);
    CHECK_THROWS_AS(sys.set(5, 2, 1.0), BandwidthError);
    try {
        sys.set(0, 3, 1.0);
    } catch (const BandwidthError& e) {
        CHECK(e.row == 0);
        CHECK(e.col == 3);
        CHECK(std::string(e.what()).find("(0, 3)") != std::string::npos);
    }
    CHECK_THROWS_AS(sys.set(-1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sys.set(0, 6, 1.0), std::invalid_argument);
}

TEST_CASE("tridiagonal Toeplitz solve matches the closed-form inverse") {
    // (2,-1) on n=8: inverse entries are min(i,j)*(n+1-max(i,j))/(n+1), 1-based.
    const int n = 8;
    BandedSystem sys(n, 1, 1);
    for (int i = 0; i < n; ++i) {
        sys.set(i, i, 2.0);
        if (i > 0)
            sys.set(i, i - 1, -1.0);
        if (i < n - 1)
            sys.set(i, i + 1, -1.0);
    }
    sys.factor();
    for (int col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[static_cast<size_t>(col)] = 1.0;
        const std::vector<double> x = sys.solve(e);
        for (int i = 0; i < n; ++i) {
            const double expected = (std::min(i, col) + 1.0) * (n - std::max(i, col)) / (n + 1.0);
            CHECK(x[static_cast<size_t>(i)] == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("three-by-three solve against hand elimination") {
    // rows {2,1,0},{1,2,1},{0,1,2}, rhs (1,2,3):
    //   2c0 + c1 = 1, c0 + 2c1 + c2 = 2, c1 + 2c2 = 3  =>  (1/2, 0, 3/2)
    BandedSystem sys(3, 1, 1);
    sys.set(0, 0, 2.0);
    sys.set(0, 1, 1.0);
    sys.set(1, 0, 1.0);
    sys.set(1, 1, 2.0);
    sys.set(1, 2, 1.0);
    sys.set(2, 1, 1.0);
    sys.set(2, 2, 2.0);
    sys.factor();
    const std::vector<double> rhs = {1.0, 2.0, 3.0};
    const std::vector<double> x = sys.solve(rhs);
    const std::vector<double> oracle = dense_solve({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}, rhs);
    CHECK(max_abs_diff(x, oracle) <= 1e-14);
    CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(0.0));
    CHECK(x[2] == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("a zero row makes the factorization fail as singular") {
    BandedSystem sys(6, 2, 2);
    for (int i = 0; i < 6; ++i)
        if (i != 3)
            sys.set(i, i, 1.0);
    CHECK_THROWS_AS(sys.factor(), SingularSystemError);
}

TEST_CASE("random diagonally dominant band systems factor and solve accurately") {
    std::mt19937 rng(123u);
    const int n = 50;
    const auto dense = random_pentadiagonal(n, rng);
    BandedSystem sys(n, 2, 2);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j)
            sys.set(i, j, dense[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    const double norm = sys.inf_norm();
    sys.factor();
    CHECK(sys.inf_norm() == norm);

    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> rhs(static_cast<size_t>(n));
    for (double& v : rhs)
        v = uni(rng);
    const std::vector<double> x = sys.solve(rhs);
    // residual against the dense copy
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = -rhs[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            s += dense[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        resid = std::max(resid, std::abs(s));
    }
    CHECK(resid <= 1e-11);

    // identity right-hand sides reconstruct inverse columns accurately
    for (int col = 0; col < n; col += 17) {
        std::vector<double> e(static_cast<size_t>(n), 0.0);
        e[static_cast<size_t>(col)] = 1.0;
        const std::vector<double> xc = sys.solve(e);
        double r = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = -e[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j)
                s += dense[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                     xc[static_cast<size_t>(j)];
            r = std::max(r, std::abs(s));
        }
        CHECK(r <= 1e-10 * norm);
    }
}

TEST_CASE("banded solve agrees with the dense elimination oracle") {
    std::mt19937 rng(987654u);
    std::uniform_int_distribution<int> size(5, 80);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = size(rng);
        const auto dense = random_pentadiagonal(n, rng);
        BandedSystem sys(n, 2, 2);
        for (int i = 0; i < n; ++i)
            for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j)
                sys.set(i, j, dense[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        sys.factor();
        std::vector<double> rhs(static_cast<size_t>(n));
        for (double& v : rhs)
            v = uni(rng);
        const std::vector<double> x = sys.solve(rhs);
        const std::vector<double> oracle = dense_solve(dense, rhs);
        CHECK(max_abs_diff(x, oracle) <= 1e-9 * (1.0 + max_abs(oracle)));
    }
}

TEST_CASE("repeated solves with the same right-hand side are bit-identical") {
    std::mt19937 rng(5u);
    const int n = 30;
    const auto dense = random_pentadiagonal(n, rng);
    BandedSystem sys(n, 2, 2);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j)
            sys.set(i, j, dense[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    sys.factor();
    std::vector<double> rhs(static_cast<size_t>(n), 1.25);
    const std::vector<double> a = sys.solve(rhs);
    const std::vector<double> b = sys.solve(rhs);
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("lifecycle misuse raises logic errors") {
    BandedSystem sys(6, 2, 2);
    for (int i = 0; i < 6; ++i)
        sys.set(i, i, 2.0);
    const std::vector<double> rhs(6, 1.0);
    CHECK_THROWS_AS(sys.solve(rhs), std::logic_error);
    sys.factor();
    CHECK_THROWS_AS(sys.factor(), std::logic_error);
    CHECK_THROWS_AS(sys.set(0, 0, 1.0), std::logic_error);
    CHECK_THROWS_AS(sys.at(0, 0), std::logic_error);
    const std::vector<double> bad(5, 1.0);
    CHECK_THROWS_AS(sys.solve(bad), std::invalid_argument);
    CHECK_THROWS_AS(BandedSystem(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BandedSystem(4, 4, 1), std::invalid_argument);
}
