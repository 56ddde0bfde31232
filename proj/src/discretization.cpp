#include "poroflow/discretization.hpp"

#include <array>
#include <cmath>

namespace poroflow {

MuClosure closure_for(BcKind kind) {
    return kind == BcKind::ZeroChemicalPotential ? MuClosure::ZeroBothEnds
                                                 : MuClosure::ZeroLeftNoFluxRight;
}

std::vector<real> pack_state(const FieldState& s) {
    const int n = s.size();
    std::vector<real> u(2 * n);
    for (int i = 0; i < n; ++i) {
        u[eps_index(i)] = s.eps[i];
        u[m_index(i)] = s.m[i];
    }
    return u;
}

FieldState unpack_state(const std::vector<real>& u, double t) {
    const int n = static_cast<int>(u.size() / 2);
    FieldState s;
    s.eps.resize(n);
    s.m.resize(n);
    s.t = t;
    for (int i = 0; i < n; ++i) {
        s.eps[i] = u[eps_index(i)];
        s.m[i] = u[m_index(i)];
    }
    return s;
}

real second_derivative(std::span<const real> f, int i, double h) {
    const int n = static_cast<int>(f.size());
    if (i < 1 || i > n - 2)
        throw IndexError("second_derivative: node " + std::to_string(i) +
                         " has no interior stencil");
    const real hh = (real)h;
    return (f[i - 1] - 2 * f[i] + f[i + 1]) / (hh * hh);
}

namespace {

// one-sided second-order second derivative at the left end (mirror for right)
real d2_onesided(const std::vector<real>& f, bool left, real h) {
    const size_t n = f.size();
    if (left)
        return (2 * f[0] - 5 * f[1] + 4 * f[2] - f[3]) / (h * h);
    return (2 * f[n - 1] - 5 * f[n - 2] + 4 * f[n - 3] - f[n - 4]) / (h * h);
}

// mu at interior nodes from the interleaved vector
inline real mu_interior(const std::vector<real>& u, int i, real ih2,
                        const ModelParams& pr) {
    const real e = u[eps_index(i)], m = u[m_index(i)];
    const real d2e =
        (u[eps_index(i - 1)] - 2 * e + u[eps_index(i + 1)]) * ih2;
    const real d2m = (u[m_index(i - 1)] - 2 * m + u[m_index(i + 1)]) * ih2;
    return dpsi_dm(m, e, pr) - (real)pr.k2 * d2e - (real)pr.k3 * d2m;
}

}  // namespace

std::vector<real> chemical_potential_field(const FieldState& s,
                                           const ModelParams& pr,
                                           const Grid& grid, MuClosure closure) {
    const int n = grid.n;
    const real h = (real)grid.h();
    const real ih2 = 1 / (h * h);
    std::vector<real> mu(n, 0.0);
    for (int i = 1; i <= n - 2; ++i) {
        const real d2e = (s.eps[i - 1] - 2 * s.eps[i] + s.eps[i + 1]) * ih2;
        const real d2m = (s.m[i - 1] - 2 * s.m[i] + s.m[i + 1]) * ih2;
        mu[i] = dpsi_dm(s.m[i], s.eps[i], pr) - (real)pr.k2 * d2e -
                (real)pr.k3 * d2m;
    }
    switch (closure) {
        case MuClosure::ZeroBothEnds:
            mu[0] = 0.0;
            mu[n - 1] = 0.0;
            break;
        case MuClosure::ZeroLeftNoFluxRight:
            mu[0] = 0.0;
            mu[n - 1] = (4 * mu[n - 2] - mu[n - 3]) / 3;
            break;
        case MuClosure::Natural:
            mu[0] = dpsi_dm(s.m[0], s.eps[0], pr) -
                    (real)pr.k2 * d2_onesided(s.eps, true, h) -
                    (real)pr.k3 * d2_onesided(s.m, true, h);
            mu[n - 1] = dpsi_dm(s.m[n - 1], s.eps[n - 1], pr) -
                        (real)pr.k2 * d2_onesided(s.eps, false, h) -
                        (real)pr.k3 * d2_onesided(s.m, false, h);
            break;
    }
    return mu;
}

std::vector<real> mechanical_residual_field(const FieldState& s,
                                            const ModelParams& pr,
                                            const Grid& grid) {
    const int n = grid.n;
    const real h = (real)grid.h();
    const real ih2 = 1 / (h * h);
    std::vector<real> r(n, 0.0);
    for (int i = 1; i <= n - 2; ++i) {
        const real d2e = (s.eps[i - 1] - 2 * s.eps[i] + s.eps[i + 1]) * ih2;
        const real d2m = (s.m[i - 1] - 2 * s.m[i] + s.m[i + 1]) * ih2;
        r[i] = dpsi_deps(s.m[i], s.eps[i], pr) - (real)pr.k1 * d2e -
               (real)pr.k2 * d2m;
    }
    r[0] = dpsi_deps(s.m[0], s.eps[0], pr) -
           (real)pr.k1 * d2_onesided(s.eps, true, h) -
           (real)pr.k2 * d2_onesided(s.m, true, h);
    r[n - 1] = dpsi_deps(s.m[n - 1], s.eps[n - 1], pr) -
               (real)pr.k1 * d2_onesided(s.eps, false, h) -
               (real)pr.k2 * d2_onesided(s.m, false, h);
    return r;
}

namespace {

void check_system(const std::vector<real>& u, const System& sys) {
    if (!sys.params || !sys.grid || !sys.regime)
        throw ConfigError("assemble: null system component");
    if (static_cast<int>(u.size()) != 2 * sys.grid->n)
        throw ConfigError("assemble: state size does not match grid");
    if (sys.mode == SystemMode::Transient) {
        if (!(sys.dt > 0.0)) throw ConfigError("assemble: dt must be > 0 in Transient mode");
        if (!sys.m_prev || static_cast<int>(sys.m_prev->size()) != sys.grid->n)
            throw ConfigError("assemble: m_prev missing or wrong length");
    }
}

}  // namespace

std::vector<real> assemble_residual(const std::vector<real>& u, const System& sys) {
    check_system(u, sys);
    const ModelParams& pr = *sys.params;
    const Grid& g = *sys.grid;
    const BcRegime& bc = *sys.regime;
    const int n = g.n;
    const real h = (real)g.h();
    const real ih2 = 1 / (h * h);

    std::vector<real> r(2 * n, 0.0);
    r[eps_index(0)] = u[eps_index(0)] - (real)bc.eps_l;
    r[m_index(0)] = u[m_index(0)] - (real)bc.m_l;
    r[eps_index(n - 1)] = u[eps_index(n - 1)] - (real)bc.eps_r;
    r[m_index(n - 1)] = u[m_index(n - 1)] - (real)bc.m_r;

    for (int i = 1; i <= n - 2; ++i) {
        const real e = u[eps_index(i)], m = u[m_index(i)];
        const real d2e = (u[eps_index(i - 1)] - 2 * e + u[eps_index(i + 1)]) * ih2;
        const real d2m = (u[m_index(i - 1)] - 2 * m + u[m_index(i + 1)]) * ih2;
        r[eps_index(i)] =
            dpsi_deps(m, e, pr) - (real)pr.k1 * d2e - (real)pr.k2 * d2m;
    }

    // mu array with the regime closure
    std::vector<real> mu(n, 0.0);
    for (int i = 1; i <= n - 2; ++i) mu[i] = mu_interior(u, i, ih2, pr);
    if (bc.kind == BcKind::OneSideImpermeable)
        mu[n - 1] = (4 * mu[n - 2] - mu[n - 3]) / 3;

    if (sys.mode == SystemMode::Stationary) {
        for (int i = 1; i <= n - 2; ++i) r[m_index(i)] = mu[i];
    } else {
        const real c = (real)sys.dt * (real)pr.rho0f * (real)pr.rho0f / (real)pr.D;
        const std::vector<real>& mp = *sys.m_prev;
        for (int i = 1; i <= n - 2; ++i) {
            const real lap = (mu[i - 1] - 2 * mu[i] + mu[i + 1]) * ih2;
            r[m_index(i)] = (u[m_index(i)] - mp[i]) - c * lap;
        }
    }
    return r;
}

BandedMatrix assemble_jacobian(const std::vector<real>& u, const System& sys) {
    check_system(u, sys);
    const ModelParams& pr = *sys.params;
    const Grid& g = *sys.grid;
    const BcRegime& bc = *sys.regime;
    const int n = g.n;
    const double h = g.h();
    const double ih2 = 1.0 / (h * h);
    const double k1 = pr.k1, k2 = pr.k2, k3 = pr.k3;

    BandedMatrix J(2 * n, kJacKl, kJacKu);
    J.set(eps_index(0), eps_index(0), 1.0);
    J.set(m_index(0), m_index(0), 1.0);
    J.set(eps_index(n - 1), eps_index(n - 1), 1.0);
    J.set(m_index(n - 1), m_index(n - 1), 1.0);

    std::vector<Hessian> hess(n);
    for (int i = 0; i < n; ++i)
        hess[i] = d2psi(u[m_index(i)], u[eps_index(i)], pr);

    for (int i = 1; i <= n - 2; ++i) {
        const int row = eps_index(i);
        J.add(row, eps_index(i), (double)hess[i].ee + 2 * k1 * ih2);
        J.add(row, m_index(i), (double)hess[i].me + 2 * k2 * ih2);
        J.add(row, eps_index(i - 1), -k1 * ih2);
        J.add(row, m_index(i - 1), -k2 * ih2);
        J.add(row, eps_index(i + 1), -k1 * ih2);
        J.add(row, m_index(i + 1), -k2 * ih2);
    }

    // d mu_j / d u as up-to-6 (col, val) entries
    struct Entry {
        int col;
        double val;
    };
    auto mu_deriv_interior = [&](int j, std::array<Entry, 6>& e) {
        e[0] = {eps_index(j), (double)hess[j].me + 2 * k2 * ih2};
        e[1] = {m_index(j), (double)hess[j].mm + 2 * k3 * ih2};
        e[2] = {eps_index(j - 1), -k2 * ih2};
        e[3] = {m_index(j - 1), -k3 * ih2};
        e[4] = {eps_index(j + 1), -k2 * ih2};
        e[5] = {m_index(j + 1), -k3 * ih2};
    };

    if (sys.mode == SystemMode::Stationary) {
        std::array<Entry, 6> e;
        for (int i = 1; i <= n - 2; ++i) {
            mu_deriv_interior(i, e);
            for (const auto& [col, val] : e) J.add(m_index(i), col, val);
        }
        return J;
    }

    const double c = sys.dt * pr.rho0f * pr.rho0f / pr.D;
    std::array<Entry, 6> e;
    auto add_mu_contrib = [&](int row, int j, double w) {
        // contribution -c * w * ih2 * d(mu_j)
        if (j == 0) return;  // mu_0 == 0 identically
        if (j == n - 1) {
            if (bc.kind == BcKind::ZeroChemicalPotential) return;
            // mu_{n-1} = (4 mu_{n-2} - mu_{n-3}) / 3
            mu_deriv_interior(n - 2, e);
            for (const auto& [col, val] : e)
                J.add(row, col, -c * w * ih2 * val * (4.0 / 3.0));
            mu_deriv_interior(n - 3, e);
            for (const auto& [col, val] : e)
                J.add(row, col, -c * w * ih2 * val * (-1.0 / 3.0));
            return;
        }
        mu_deriv_interior(j, e);
        for (const auto& [col, val] : e) J.add(row, col, -c * w * ih2 * val);
    };

    for (int i = 1; i <= n - 2; ++i) {
        const int row = m_index(i);
        J.add(row, m_index(i), 1.0);
        add_mu_contrib(row, i - 1, 1.0);
        add_mu_contrib(row, i, -2.0);
        add_mu_contrib(row, i + 1, 1.0);
    }
    return J;
}

}  // namespace poroflow
