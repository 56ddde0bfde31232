#pragma once

#include <functional>
#include <vector>

#include "poroflow/banded.hpp"
#include "poroflow/model.hpp"

namespace poroflow {

struct NewtonConfig {
    double tol_residual = 1e-10;
    int max_iters = 50;
    double backtrack = 0.5;           // line-search backtracking factor
    double min_step = 9.5367431640625e-07;  // 2^-20
    double armijo = 1e-4;
    // When set, a stalled line search takes the full step anyway and the best
    // iterate is kept; convergence is then judged on the best iterate. Used
    // by the pseudo-transient stationary driver where the residual is
    // transiently nonmonotone.
    bool nonmonotone = false;
    int stagnation_limit = 4;
};

struct NewtonResult {
    std::vector<real> solution;
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
    std::vector<double> residual_history;  // ||r||_inf per iteration, entry 0 = initial
};

using ResidualFn = std::function<std::vector<real>(const std::vector<real>&)>;
using JacobianFn = std::function<BandedMatrix(const std::vector<real>&)>;

// Damped Newton core; never throws on solver failure (converged flag + best
// iterate instead). SingularMatrixError from the factorization is absorbed as
// failure.
NewtonResult newton_solve_impl(std::vector<real> initial, const ResidualFn& f,
                               const JacobianFn& jac, const NewtonConfig& cfg);

// Contract form: returns the result on success, throws ConvergenceError
// carrying the best iterate otherwise.
NewtonResult newton_solve(std::vector<real> initial, const ResidualFn& f,
                          const JacobianFn& jac, const NewtonConfig& cfg);

double inf_norm(const std::vector<real>& v);

}  // namespace poroflow
