#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

// Test-only oracles, kept independent of the library code paths they check.

namespace testsupport {

// Dense Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const size_t n = a.size();
    for (size_t j = 0; j < n; ++j) {
        size_t p = j;
        for (size_t i = j + 1; i < n; ++i)
            if (std::abs(a[i][j]) > std::abs(a[p][j]))
                p = i;
        if (a[p][j] == 0.0)
            throw std::runtime_error("dense_solve: singular");
        std::swap(a[j], a[p]);
        std::swap(b[j], b[p]);
        for (size_t i = j + 1; i < n; ++i) {
            const double m = a[i][j] / a[j][j];
            for (size_t jj = j; jj < n; ++jj)
                a[i][jj] -= m * a[j][jj];
            b[i] -= m * b[j];
        }
    }
    std::vector<double> x(n);
    for (size_t j = n; j-- > 0;) {
        double s = b[j];
        for (size_t jj = j + 1; jj < n; ++jj)
            s -= a[j][jj] * x[jj];
        x[j] = s / a[j][j];
    }
    return x;
}

// Random diagonally dominant pentadiagonal matrix as a dense array.
inline std::vector<std::vector<double>> random_pentadiagonal(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j) {
            if (j == i)
                continue;
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = uni(rng);
            off += std::abs(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        const double sign = uni(rng) < 0.0 ? -1.0 : 1.0;
        a[static_cast<size_t>(i)][static_cast<size_t>(i)] = sign * (off + 0.5 + std::abs(uni(rng)));
    }
    return a;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

inline double max_abs(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

} // namespace testsupport
