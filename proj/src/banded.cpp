#include "telegraph/banded.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace telegraph {

BandwidthError::BandwidthError(int row_, int col_, int lower, int upper)
    : std::invalid_argument("band entry (" + std::to_string(row_) + ", " + std::to_string(col_) +
                            ") outside bandwidths (" + std::to_string(lower) + ", " +
                            std::to_string(upper) + ")"),
      row(row_), col(col_) {}

BandedSystem::BandedSystem(int n, int lower, int upper)
    : n_(n), kl_(lower), ku_(upper), ldab_(2 * lower + upper + 1),
      ab_(static_cast<size_t>(n) * static_cast<size_t>(2 * lower + upper + 1), 0.0),
      pivot_(static_cast<size_t>(n), 0) {
    if (n < 1)
        throw std::invalid_argument("BandedSystem: dimension must be positive");
    if (lower < 0 || upper < 0 || lower >= n || upper >= n)
        throw std::invalid_argument("BandedSystem: bandwidths must lie in [0, n)");
}

void BandedSystem::set(int row, int col, double value) {
    if (factored_)
        throw std::logic_error("BandedSystem: cannot modify a factored system");
    if (row < 0 || row >= n_ || col < 0 || col >= n_)
        throw std::invalid_argument("BandedSystem: index out of range");
    if (row - col > kl_ || col - row > ku_)
        throw BandwidthError(row, col, kl_, ku_);
    entry(row, col) = value;
}

double BandedSystem::at(int row, int col) const {
    if (factored_)
        throw std::logic_error("BandedSystem: entries are overwritten by factor()");
    if (row < 0 || row >= n_ || col < 0 || col >= n_)
        throw std::invalid_argument("BandedSystem: index out of range");
    if (row - col > kl_ || col - row > ku_)
        return 0.0;
    return entry(row, col);
}

double BandedSystem::compute_inf_norm() const {
    double norm = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row_sum = 0.0;
        for (int j = std::max(0, i - kl_); j <= std::min(n_ - 1, i + ku_); ++j)
            row_sum += std::abs(entry(i, j));
        norm = std::max(norm, row_sum);
    }
    return norm;
}

double BandedSystem::inf_norm() const { return factored_ ? norm_inf_ : compute_inf_norm(); }

void BandedSystem::factor() {
    if (factored_)
        throw std::logic_error("BandedSystem: already factored");
    norm_inf_ = compute_inf_norm();
    const double tol = 1e-14 * norm_inf_;

    for (int j = 0; j < n_; ++j) {
        const int last_row = std::min(n_ - 1, j + kl_);
        int p = j;
        double pmag = std::abs(entry(j, j));
        for (int i = j + 1; i <= last_row; ++i) {
            const double mag = std::abs(entry(i, j));
            if (mag > pmag) {
                pmag = mag;
                p = i;
            }
        }
        if (!(pmag > tol))
            throw SingularSystemError("BandedSystem: pivot " + std::to_string(pmag) +
                                      " below threshold at column " + std::to_string(j));
        pivot_[static_cast<size_t>(j)] = p;
        const int last_col = std::min(n_ - 1, j + kl_ + ku_);
        if (p != j)
            for (int jj = j; jj <= last_col; ++jj)
                std::swap(entry(j, jj), entry(p, jj));
        const double diag = entry(j, j);
        for (int i = j + 1; i <= last_row; ++i) {
            const double m = entry(i, j) / diag;
            entry(i, j) = m;
            for (int jj = j + 1; jj <= last_col; ++jj)
                entry(i, jj) -= m * entry(j, jj);
        }
    }
    factored_ = true;
}

std::vector<double> BandedSystem::solve(std::span<const double> rhs) const {
    if (!factored_)
        throw std::logic_error("BandedSystem: factor() before solve()");
    if (static_cast<int>(rhs.size()) != n_)
        throw std::invalid_argument("BandedSystem: rhs length " + std::to_string(rhs.size()) +
                                    " != dimension " + std::to_string(n_));
    std::vector<double> x(rhs.begin(), rhs.end());
    for (int j = 0; j < n_; ++j) {
        const int p = pivot_[static_cast<size_t>(j)];
        if (p != j)
            std::swap(x[static_cast<size_t>(j)], x[static_cast<size_t>(p)]);
        const double xj = x[static_cast<size_t>(j)];
        for (int i = j + 1; i <= std::min(n_ - 1, j + kl_); ++i)
            x[static_cast<size_t>(i)] -= entry(i, j) * xj;
    }
    for (int j = n_ - 1; j >= 0; --j) {
        double s = x[static_cast<size_t>(j)];
        for (int jj = j + 1; jj <= std::min(n_ - 1, j + kl_ + ku_); ++jj)
            s -= entry(j, jj) * x[static_cast<size_t>(jj)];
        x[static_cast<size_t>(j)] = s / entry(j, j);
    }
    return x;
}

} // namespace telegraph
