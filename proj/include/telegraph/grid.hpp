#pragma once

namespace telegraph {

// Uniform partition a = x_0 < x_1 < ... < x_N = b with spacing h = (b-a)/N.
// Nodes extend virtually beyond [a,b] with the same spacing, which is what
// the boundary-adjacent basis functions reference.  The corner rows of the
// collocation matrix touch coefficients 0..2 and N-2..N; keeping those index
// groups disjoint requires N >= 5.
class UniformGrid {
public:
    UniformGrid(double a, double b, int n_intervals);

    double a() const { return a_; }
    double b() const { return b_; }
    int n() const { return n_; }
    double h() const { return h_; }

    // Node position; any integer index is valid (virtual extension).
    double node(int i) const { return a_ + i * h_; }

private:
    double a_;
    double b_;
    double h_;
    int n_;
};

} // namespace telegraph
