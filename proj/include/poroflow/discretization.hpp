#pragma once

#include <span>
#include <vector>

#include "poroflow/banded.hpp"
#include "poroflow/grid.hpp"
#include "poroflow/model.hpp"

namespace poroflow {

// Half-bandwidths of the interleaved Jacobian; the mu'' coupling reaches two
// nodes (= four interleaved slots, plus the field offset).
inline constexpr int kJacKl = 5;
inline constexpr int kJacKu = 5;

enum class SystemMode { Stationary, Transient };

// Boundary closure of the discrete chemical-potential array.
enum class MuClosure {
    ZeroBothEnds,        // mu = 0 at l1 and l2 (zero chemical potential)
    ZeroLeftNoFluxRight,  // mu(l1) = 0, second-order one-sided mu'(l2) = 0
    Natural,              // one-sided second derivatives at both ends
};

MuClosure closure_for(BcKind kind);

// Interleaved unknown layout: (eps_0, m_0, eps_1, m_1, ...).
inline int eps_index(int i) { return 2 * i; }
inline int m_index(int i) { return 2 * i + 1; }

std::vector<real> pack_state(const FieldState& s);
FieldState unpack_state(const std::vector<real>& u, double t);

// 3-point second difference (f_{i-1} - 2 f_i + f_{i+1}) / h^2.
// Throws IndexError at boundary nodes (no ghost values).
real second_derivative(std::span<const real> f, int i, double h);

// mu_i = dpsi_dm(m_i, eps_i) - k2 eps''_i - k3 m''_i with the requested
// boundary closure.
std::vector<real> chemical_potential_field(const FieldState& s,
                                           const ModelParams& pr,
                                           const Grid& grid, MuClosure closure);

// dpsi_deps(m_i, eps_i) - k1 eps''_i - k2 m''_i, one-sided at the ends.
std::vector<real> mechanical_residual_field(const FieldState& s,
                                            const ModelParams& pr,
                                            const Grid& grid);

// Discrete system description for residual/Jacobian assembly.
struct System {
    const ModelParams* params = nullptr;
    const Grid* grid = nullptr;
    const BcRegime* regime = nullptr;
    SystemMode mode = SystemMode::Stationary;
    double dt = 0.0;                          // Transient only
    const std::vector<real>* m_prev = nullptr;  // Transient only, length n
};

// Interleaved residual, length 2n. Rows at i in {0, n-1} are the Dirichlet
// rows; interior rows are [mechanical, mass]. The transient mass row is
// scaled to m-units: (m_i - m_prev_i) - (dt rho0f^2 / D) mu''_i.
std::vector<real> assemble_residual(const std::vector<real>& u, const System& sys);

// Exact analytic Jacobian of assemble_residual (double precision, banded).
BandedMatrix assemble_jacobian(const std::vector<real>& u, const System& sys);

}  // namespace poroflow
