#include "chio/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "chio/errors.hpp"

namespace chio {

void DenseMatrix::set_zero() {
    std::fill(a_.begin(), a_.end(), 0.0);
}

LuFactors LuFactors::factor(const DenseMatrix& m) {
    LuFactors f;
    f.lu_ = m;
    const int n = m.size();
    f.piv_.resize(static_cast<size_t>(n));

    for (int k = 0; k < n; ++k) {
        // partial pivoting: largest magnitude entry in column k at or below the diagonal
        int p = k;
        double best = std::fabs(f.lu_.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::fabs(f.lu_.at(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best)) {
            throw SolverError("singular matrix at column " + std::to_string(k));
        }
        f.piv_[static_cast<size_t>(k)] = p;
        if (p != k) {
            std::swap_ranges(f.lu_.row(k), f.lu_.row(k) + n, f.lu_.row(p));
        }
        const double pivot = f.lu_.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            double& lik = f.lu_.at(i, k);
            if (lik == 0.0) {
                continue;
            }
            lik /= pivot;
            const double l = lik;
            const double* rk = f.lu_.row(k);
            double* ri = f.lu_.row(i);
            for (int j = k + 1; j < n; ++j) {
                ri[j] -= l * rk[j];
            }
        }
    }
    return f;
}

void LuFactors::solve(std::vector<double>& b) const {
    const int n = lu_.size();
    for (int k = 0; k < n; ++k) {
        const int p = piv_[static_cast<size_t>(k)];
        if (p != k) {
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(p)]);
        }
        const double bk = b[static_cast<size_t>(k)];
        if (bk == 0.0) {
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            b[static_cast<size_t>(i)] -= lu_.at(i, k) * bk;
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        double s = b[static_cast<size_t>(k)];
        const double* rk = lu_.row(k);
        for (int j = k + 1; j < n; ++j) {
            s -= rk[j] * b[static_cast<size_t>(j)];
        }
        b[static_cast<size_t>(k)] = s / rk[k];
    }
}

}  // namespace chio
