#pragma once

#include <string>
#include <vector>

#include "poroflow/errors.hpp"
#include "poroflow/model.hpp"

namespace poroflow {

// Uniform 1-D mesh over [l1, l2].
struct Grid {
    double l1 = 0.0;
    double l2 = 1.0;
    int n = 201;  // total node count, boundaries included

    double h() const { return (l2 - l1) / (n - 1); }
    double x(int i) const { return l1 + i * h(); }

    void validate() const {
        std::vector<std::string> bad;
        if (!(n >= 5)) bad.push_back("grid.n must be >= 5");
        if (!(l2 > l1)) bad.push_back("grid.l2 must be > grid.l1");
        if (!bad.empty()) throw ValidationError(std::move(bad));
    }
};

// Discrete (eps, m) profiles at one time instant.
struct FieldState {
    std::vector<real> eps;
    std::vector<real> m;
    double t = 0.0;

    int size() const { return static_cast<int>(m.size()); }
};

enum class BcKind { ZeroChemicalPotential, OneSideImpermeable };

// Boundary-condition regime plus Dirichlet boundary values.
struct BcRegime {
    BcKind kind = BcKind::ZeroChemicalPotential;
    double eps_l = 0.0, m_l = 0.0;
    double eps_r = 0.0, m_r = 0.0;
};

struct InitialCondition {
    enum class Kind {
        LinearConnecting,
        FluidPoorConstant,
        FluidRichConstant,
        FromFile,
    };
    Kind kind = Kind::LinearConnecting;
    std::string path;  // FromFile only
};

}  // namespace poroflow
