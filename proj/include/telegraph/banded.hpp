#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace telegraph {

struct BandwidthError : std::invalid_argument {
    BandwidthError(int row_, int col_, int lower, int upper);
    int row;
    int col;
};

struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

// Square band matrix with an in-place LU factorization (partial pivoting,
// fill confined to lower+upper superdiagonals).  Storage follows the usual
// band convention: column j keeps rows j-upper..j+lower plus `lower` spare
// rows on top for pivoting fill.  Factor once, solve many times; a factored
// system is immutable and safe to share across threads.
class BandedSystem {
public:
    BandedSystem(int n, int lower, int upper);

    int size() const { return n_; }
    int lower_bandwidth() const { return kl_; }
    int upper_bandwidth() const { return ku_; }
    bool factored() const { return factored_; }

    // Entry access on the unfactored matrix.  set throws BandwidthError
    // outside the band and std::logic_error once factored; at() returns 0
    // outside the band.
    void set(int row, int col, double value);
    double at(int row, int col) const;

    // Max absolute row sum of the original matrix (cached by factor()).
    double inf_norm() const;

    // LU with partial pivoting.  Throws SingularSystemError when a pivot
    // falls below 1e-14 * inf_norm(), std::logic_error if already factored.
    void factor();

    std::vector<double> solve(std::span<const double> rhs) const;

private:
    double& entry(int i, int j) { return ab_[static_cast<size_t>(j) * ldab_ + kl_ + ku_ + i - j]; }
    const double& entry(int i, int j) const {
        return ab_[static_cast<size_t>(j) * ldab_ + kl_ + ku_ + i - j];
    }
    double compute_inf_norm() const;

    int n_;
    int kl_;
    int ku_;
    int ldab_;
    bool factored_ = false;
    double norm_inf_ = 0.0;
    std::vector<double> ab_;
    std::vector<int> pivot_;
};

} // namespace telegraph
