#pragma once

#include <vector>

#include "poroflow/errors.hpp"

namespace poroflow {

// Numeric type of field values and residuals. Extended precision keeps the
// roundoff floor of the stiff stencil terms (k/h^4 scale) below the solver
// tolerances; linear algebra stays in double.
using real = long double;

// Material and control constants of the dimensionless model.
struct ModelParams {
    double a = 0.5;      // fluid/solid rigidity ratio
    double b = 1.0;      // fluid-solid coupling
    double alpha = 100;  // nonlinearity coefficient
    double p = 0.0;      // external pressure
    double k1 = 1e-3;    // second-gradient coefficient on eps'
    double k2 = 1e-3;    // second-gradient cross coefficient
    double k3 = 1e-3;    // second-gradient coefficient on m'
    double D = 1.0;      // Darcy dissipation coefficient
    double rho0f = 1.0;  // reference fluid density

    // k1*k3 - k2^2; >= 0 required, > 0 is the connection-existence regime.
    double gradient_det() const { return k1 * k3 - k2 * k2; }
    bool strict_connection() const { return gradient_det() > 0.0; }

    // Throws ValidationError listing every violated invariant.
    void validate() const;
};

// A constant equilibrium (m, eps) pair.
struct PhasePoint {
    double m = 0.0;
    double eps = 0.0;
};

// Biot potential energy density: p*eps + eps^2/2 + (a/2)(m - b*eps)^2.
real psi_biot(real m, real eps, const ModelParams& pr);

// Total potential energy density:
// (alpha/12) m^2 (3m^2 - 8 b eps m + 6 b^2 eps^2) + psi_biot.
real psi_total(real m, real eps, const ModelParams& pr);

// First partials of psi_total.
real dpsi_dm(real m, real eps, const ModelParams& pr);
real dpsi_deps(real m, real eps, const ModelParams& pr);

struct Hessian {
    real mm, me, ee;  // symmetric cross term me
};

// Analytic second partials of psi_total.
Hessian d2psi(real m, real eps, const ModelParams& pr);

}  // namespace poroflow
