#pragma once

#include <vector>

#include "poroflow/errors.hpp"

namespace poroflow {

// Band matrix in LAPACK-style storage (extra kl rows reserved for LU fill).
class BandedMatrix {
  public:
    BandedMatrix(int n, int kl, int ku);

    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    bool in_band(int i, int j) const {
        return i - j <= kl_ && j - i <= ku_;
    }
    double get(int i, int j) const;  // 0 outside the band
    void set(int i, int j, double v);
    void add(int i, int j, double v);
    void clear();

    std::vector<double> multiply(const std::vector<double>& x) const;

  private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> a_;

    int idx(int i, int j) const { return (kl_ + ku_ + i - j) + j * ldab_; }

    friend class BandedLU;
};

// LU factorization with partial pivoting confined to the band.
// Throws SingularMatrixError when a pivot falls below 1e-14 times the largest
// pivot encountered.
class BandedLU {
  public:
    explicit BandedLU(const BandedMatrix& A);

    void solve_inplace(std::vector<double>& b) const;
    std::vector<double> solve(std::vector<double> b) const {
        solve_inplace(b);
        return b;
    }

  private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> a_;
    std::vector<int> ipiv_;
};

// Factor-and-solve with backward-error verification: after (at most 3 rounds
// of) iterative refinement, ||b - A x||_inf <= 1e-12 * ||b||_inf or an Error
// is thrown.
std::vector<double> solve_banded(const BandedMatrix& A,
                                 const std::vector<double>& rhs);

}  // namespace poroflow
