#pragma once

#include <optional>

#include "poroflow/model.hpp"

namespace poroflow {

// Standard-phase pressure locus: f1(eps) = -eps - (alpha b^4 / 3) eps^3.
double f1(double eps, const ModelParams& pr);

// Fluid-rich mass branch m_+(eps) = (b/2)[eps + sqrt(eps^2 - 4a/(alpha b^2))].
// Throws DomainError for a negative discriminant.
double m_plus(double eps, const ModelParams& pr);

// Fluid-rich pressure locus
// f_+(eps) = -eps + a b [m_+ - b eps] - alpha b^2 eps m_+^2 + (2/3) alpha b m_+^3.
double f_plus(double eps, const ModelParams& pr);

struct CriticalPoint {
    double p_c;
    double eps_c;
};

// Minimizer of f_plus on its real branch; p_c = f_plus(eps_c).
CriticalPoint critical_pressure(const ModelParams& pr);

// Unique constant equilibrium on m = b*eps with p = f1(eps), eps <= 0.
PhasePoint standard_phase(double p, const ModelParams& pr);

// Constant equilibrium on the fluid-rich locus, smallest-eps root of
// f_plus(eps) = p. Throws DomainError for p < p_c.
PhasePoint fluid_rich_phase(double p, const ModelParams& pr);

// Root of Psi(standard(p)) - Psi(fluid_rich(p)) above p_c.
double coexistence_pressure(const ModelParams& pr, double p_hi_factor = 10.0);

struct PhaseDiagramPoint {
    double p;
    PhasePoint standard;
    std::optional<PhasePoint> fluid_rich;  // absent for p < p_c
};

PhaseDiagramPoint phase_diagram_point(double p, const ModelParams& pr);

}  // namespace poroflow
