#include "poroflow/model.hpp"

#include <cmath>
#include <string>

namespace poroflow {

void ModelParams::validate() const {
    std::vector<std::string> bad;
    auto chk = [&](bool ok, const std::string& msg) {
        if (!ok) bad.push_back(msg);
    };
    chk(std::isfinite(a) && a > 0.0, "a must be > 0");
    chk(std::isfinite(b) && b > 0.0, "b must be > 0");
    chk(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    chk(std::isfinite(p) && p >= 0.0, "p must be >= 0");
    chk(std::isfinite(D) && D > 0.0, "D must be > 0");
    chk(std::isfinite(rho0f) && rho0f > 0.0, "rho0f must be > 0");
    chk(std::isfinite(k1) && k1 > 0.0, "k1 must be > 0");
    chk(std::isfinite(k3) && k3 > 0.0, "k3 must be > 0");
    chk(std::isfinite(k2), "k2 must be finite");
    if (k1 > 0.0 && k3 > 0.0) {
        // small relative slack: the paper's k1=k2=k3 case sits exactly on the
        // admissibility boundary and must not be rejected by roundoff
        const double slack = 16.0 * 2.2e-16 * k1 * k3;
        chk(gradient_det() >= -slack, "k1*k3 - k2^2 must be >= 0");
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

real psi_biot(real m, real eps, const ModelParams& pr) {
    const real a = pr.a, b = pr.b, p = pr.p;
    const real c = m - b * eps;
    return p * eps + eps * eps / 2 + a / 2 * c * c;
}

real psi_total(real m, real eps, const ModelParams& pr) {
    const real b = pr.b, al = pr.alpha;
    const real quart =
        al / 12 * m * m * (3 * m * m - 8 * b * eps * m + 6 * b * b * eps * eps);
    return quart + psi_biot(m, eps, pr);
}

real dpsi_dm(real m, real eps, const ModelParams& pr) {
    const real a = pr.a, b = pr.b, al = pr.alpha;
    return al * m * m * m - 2 * al * b * m * m * eps +
           al * b * b * m * eps * eps + a * (m - b * eps);
}

real dpsi_deps(real m, real eps, const ModelParams& pr) {
    const real a = pr.a, b = pr.b, al = pr.alpha, p = pr.p;
    return -real(2) / 3 * al * b * m * m * m + al * b * b * m * m * eps + p +
           eps - a * b * (m - b * eps);
}

Hessian d2psi(real m, real eps, const ModelParams& pr) {
    const real a = pr.a, b = pr.b, al = pr.alpha;
    Hessian h;
    h.mm = 3 * al * m * m - 4 * al * b * m * eps + al * b * b * eps * eps + a;
    h.me = -2 * al * b * m * m + 2 * al * b * b * m * eps - a * b;
    h.ee = al * b * b * m * m + 1 + a * b * b;
    return h;
}

}  // namespace poroflow
