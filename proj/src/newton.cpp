#include "poroflow/newton.hpp"

#include <cmath>

namespace poroflow {

double inf_norm(const std::vector<real>& v) {
    real m = 0.0;
    for (real x : v) {
        const real a = x < 0 ? -x : x;
        if (a > m) m = a;
    }
    return (double)m;
}

namespace {

std::vector<real> axpy(const std::vector<real>& u, double s,
                       const std::vector<double>& du) {
    std::vector<real> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] + (real)s * (real)du[i];
    return out;
}

}  // namespace

NewtonResult newton_solve_impl(std::vector<real> u, const ResidualFn& f,
                               const JacobianFn& jac, const NewtonConfig& cfg) {
    NewtonResult res;
    std::vector<real> r = f(u);
    double nr = inf_norm(r);
    res.residual_history.push_back(nr);

    std::vector<real> best_u = u;
    double best_nr = nr;
    int stagnation = 0;

    for (int it = 0; it < cfg.max_iters; ++it) {
        if (nr <= cfg.tol_residual) {
            res.solution = std::move(u);
            res.iterations = it;
            res.residual_norm = nr;
            res.converged = true;
            return res;
        }
        std::vector<double> du;
        try {
            BandedMatrix J = jac(u);
            std::vector<double> rhs(r.size());
            for (size_t i = 0; i < r.size(); ++i) rhs[i] = -(double)r[i];
            BandedLU lu(J);
            du = lu.solve(std::move(rhs));
        } catch (const SingularMatrixError&) {
            break;
        }

        double step = 1.0;
        bool accepted = false;
        while (step >= cfg.min_step) {
            std::vector<real> ut = axpy(u, step, du);
            std::vector<real> rt = f(ut);
            const double nrt = inf_norm(rt);
            if (nrt <= (1.0 - cfg.armijo * step) * nr ||
                nrt <= 0.5 * cfg.tol_residual) {
                u = std::move(ut);
                r = std::move(rt);
                nr = nrt;
                accepted = true;
                break;
            }
            step *= cfg.backtrack;
        }
        if (!accepted) {
            if (!cfg.nonmonotone) break;  // stalled
            u = axpy(u, 1.0, du);
            r = f(u);
            nr = inf_norm(r);
        }
        res.residual_history.push_back(nr);
        if (nr < 0.7 * best_nr)
            stagnation = 0;
        else
            ++stagnation;
        if (nr < best_nr) {
            best_u = u;
            best_nr = nr;
        }
        if (cfg.nonmonotone && stagnation >= cfg.stagnation_limit) break;
    }

    res.solution = std::move(best_u);
    res.iterations = (int)res.residual_history.size() - 1;
    res.residual_norm = best_nr;
    res.converged = best_nr <= cfg.tol_residual;
    return res;
}

NewtonResult newton_solve(std::vector<real> initial, const ResidualFn& f,
                          const JacobianFn& jac, const NewtonConfig& cfg) {
    NewtonResult res = newton_solve_impl(std::move(initial), f, jac, cfg);
    if (!res.converged)
        throw ConvergenceError("newton_solve: no convergence, best residual " +
                                   std::to_string(res.residual_norm) + " after " +
                                   std::to_string(res.iterations) + " iterations",
                               res.solution, res.residual_norm, res.iterations);
    return res;
}

}  // namespace poroflow
