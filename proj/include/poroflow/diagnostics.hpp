#pragma once

#include <vector>

#include "poroflow/discretization.hpp"
#include "poroflow/grid.hpp"
#include "poroflow/model.hpp"

namespace poroflow {

struct EnergyRecord {
    double t = 0.0;
    double F = 0.0;       // total: F_bulk + F_grad
    double F_bulk = 0.0;  // trapezoid of Psi
    double F_grad = 0.0;  // trapezoid of (k1 e'^2 + 2 k2 e'm' + k3 m'^2)/2
};

// Trapezoidal quadrature of Phi; centered first derivatives, second-order
// one-sided at the boundaries.
EnergyRecord energy(const FieldState& s, const ModelParams& pr, const Grid& g);

// v = -(rho0f/D) mu'; centered interior, second-order one-sided at ends.
// The closure selects the mu boundary treatment (regime-dependent).
std::vector<real> seepage_velocity(const FieldState& s, const ModelParams& pr,
                                   const Grid& g,
                                   MuClosure closure = MuClosure::Natural);

struct Extremum {
    double x = 0.0;  // parabolic sub-grid position for interior extrema
    double v = 0.0;
};

struct FeatureSet {
    std::vector<Extremum> maxima;  // |v| above 1% of max|v|, endpoints included
    std::vector<Extremum> minima;
    double max_positive = 0.0;
    double min_negative = 0.0;
};

// Local extrema of v after 3-point moving-average smoothing.
// Throws FeatureError when v is identically zero.
FeatureSet velocity_features(const std::vector<real>& v, const Grid& g,
                             double threshold_fraction = 0.01);

// Trapezoidal total fluid mass increment.
double total_mass(const FieldState& s, const Grid& g);

// Two-point end fluxes (rho0f^2/D) mu' matching the discrete Gauss identity
// of the interior mass update exactly.
struct BoundaryFluxes {
    double left = 0.0;
    double right = 0.0;
};
BoundaryFluxes boundary_fluxes(const FieldState& s, const ModelParams& pr,
                               const Grid& g, MuClosure closure);

}  // namespace poroflow
