#include "poroflow/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace poroflow {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
      a_(static_cast<size_t>(ldab_) * n, 0.0) {
    if (n < 1 || kl < 0 || ku < 0)
        throw ConfigError("BandedMatrix: invalid dimensions");
}

double BandedMatrix::get(int i, int j) const {
    if (!in_band(i, j)) return 0.0;
    return a_[idx(i, j)];
}

void BandedMatrix::set(int i, int j, double v) {
    if (!in_band(i, j)) throw IndexError("BandedMatrix::set outside band");
    a_[idx(i, j)] = v;
}

void BandedMatrix::add(int i, int j, double v) {
    if (!in_band(i, j)) throw IndexError("BandedMatrix::add outside band");
    a_[idx(i, j)] += v;
}

void BandedMatrix::clear() { std::fill(a_.begin(), a_.end(), 0.0); }

std::vector<double> BandedMatrix::multiply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw ConfigError("BandedMatrix::multiply: size mismatch");
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        const int jlo = std::max(0, i - kl_);
        const int jhi = std::min(n_ - 1, i + ku_);
        long double s = 0.0L;
        for (int j = jlo; j <= jhi; ++j) s += (long double)a_[idx(i, j)] * x[j];
        y[i] = (double)s;
    }
    return y;
}

BandedLU::BandedLU(const BandedMatrix& A)
    : n_(A.n_), kl_(A.kl_), ku_(A.ku_), ldab_(A.ldab_), a_(A.a_), ipiv_(A.n_) {
    auto at = [&](int r, int j) -> double& { return a_[r + j * ldab_]; };
    const int kv = kl_ + ku_;  // row offset of the diagonal in storage
    double max_pivot = 0.0;

    for (int j = 0; j < n_; ++j) {
        // pivot search in column j, rows j..j+kl
        const int ilim = std::min(n_ - 1, j + kl_);
        int imax = j;
        double amax = std::fabs(at(kv, j));
        for (int i = j + 1; i <= ilim; ++i) {
            const double v = std::fabs(at(kv + i - j, j));
            if (v > amax) {
                amax = v;
                imax = i;
            }
        }
        max_pivot = std::max(max_pivot, amax);
        if (amax == 0.0 || amax < 1e-14 * max_pivot)
            throw SingularMatrixError("banded LU: pivot " + std::to_string(amax) +
                                      " below tolerance at column " +
                                      std::to_string(j));
        ipiv_[j] = imax;
        const int jhi = std::min(n_ - 1, j + kl_ + ku_);
        if (imax != j) {
            for (int k = j; k <= jhi; ++k)
                std::swap(a_[kv + j - k + k * ldab_], a_[kv + imax - k + k * ldab_]);
        }
        const double piv = at(kv, j);
        for (int i = j + 1; i <= ilim; ++i) {
            const double l = at(kv + i - j, j) / piv;
            at(kv + i - j, j) = l;
            if (l != 0.0) {
                for (int k = j + 1; k <= jhi; ++k)
                    a_[kv + i - k + k * ldab_] -= l * a_[kv + j - k + k * ldab_];
            }
        }
    }
}

void BandedLU::solve_inplace(std::vector<double>& b) const {
    if (static_cast<int>(b.size()) != n_)
        throw ConfigError("BandedLU::solve: size mismatch");
    const int kv = kl_ + ku_;
    // forward substitution with row interchanges
    for (int j = 0; j < n_; ++j) {
        if (ipiv_[j] != j) std::swap(b[j], b[ipiv_[j]]);
        const int ilim = std::min(n_ - 1, j + kl_);
        const double bj = b[j];
        if (bj != 0.0) {
            for (int i = j + 1; i <= ilim; ++i)
                b[i] -= a_[kv + i - j + j * ldab_] * bj;
        }
    }
    // back substitution
    for (int j = n_ - 1; j >= 0; --j) {
        b[j] /= a_[kv + j * ldab_];
        const double bj = b[j];
        if (bj != 0.0) {
            const int ilo = std::max(0, j - kl_ - ku_);
            for (int i = ilo; i < j; ++i)
                b[i] -= a_[kv + i - j + j * ldab_] * bj;
        }
    }
}

std::vector<double> solve_banded(const BandedMatrix& A,
                                 const std::vector<double>& rhs) {
    BandedLU lu(A);
    std::vector<double> x = lu.solve(rhs);
    double bnorm = 0.0;
    for (double v : rhs) bnorm = std::max(bnorm, std::fabs(v));
    for (int round = 0; round < 3; ++round) {
        std::vector<double> Ax = A.multiply(x);
        std::vector<double> r(x.size());
        double rnorm = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            r[i] = rhs[i] - Ax[i];
            rnorm = std::max(rnorm, std::fabs(r[i]));
        }
        if (rnorm <= 1e-12 * bnorm || bnorm == 0.0) return x;
        std::vector<double> dx = lu.solve(r);
        for (size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
    }
    std::vector<double> Ax = A.multiply(x);
    double rnorm = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        rnorm = std::max(rnorm, std::fabs(rhs[i] - Ax[i]));
    if (rnorm > 1e-12 * bnorm)
        throw Error("solve_banded: backward error " + std::to_string(rnorm) +
                    " exceeds tolerance");
    return x;
}

}  // namespace poroflow
