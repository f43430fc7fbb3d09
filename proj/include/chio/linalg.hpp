#pragma once

#include <vector>

namespace chio {

/// Row-major dense matrix sized for MNA systems (a few hundred unknowns).
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {}

    int size() const { return n_; }
    double& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    double at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
    double* row(int r) { return a_.data() + static_cast<size_t>(r) * n_; }
    const double* row(int r) const { return a_.data() + static_cast<size_t>(r) * n_; }
    void set_zero();

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// LU factorization with partial pivoting, factors stored in place.
class LuFactors {
public:
    LuFactors() = default;

    /// Factors a copy of m. Throws SolverError on a numerically singular matrix.
    static LuFactors factor(const DenseMatrix& m);

    /// Solves A x = b using the stored factors; b is overwritten with x.
    void solve(std::vector<double>& b) const;

    int size() const { return lu_.size(); }

private:
    DenseMatrix lu_;
    std::vector<int> piv_;
};

}  // namespace chio
