#include "poroflow/phases.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace poroflow {

namespace {

using ld = long double;

ld f1_ld(ld eps, const ModelParams& pr) {
    const ld b = pr.b, al = pr.alpha;
    const ld b4 = b * b * b * b;
    return -eps - al * b4 / 3 * eps * eps * eps;
}

// branch boundary: discriminant of m_plus vanishes at eps_star = -2 sqrt(a/alpha)/b
ld eps_star(const ModelParams& pr) {
    return -2 * std::sqrt((ld)pr.a / (ld)pr.alpha) / (ld)pr.b;
}

ld m_plus_ld(ld eps, const ModelParams& pr) {
    const ld a = pr.a, b = pr.b, al = pr.alpha;
    const ld disc = eps * eps - 4 * a / (al * b * b);
    if (disc < 0)
        throw DomainError("m_plus: eps^2 < 4a/(alpha b^2) at eps = " +
                          std::to_string((double)eps));
    return b / 2 * (eps + std::sqrt(disc));
}

ld f_plus_ld(ld eps, const ModelParams& pr) {
    const ld a = pr.a, b = pr.b, al = pr.alpha;
    const ld mp = m_plus_ld(eps, pr);
    return -eps + a * b * (mp - b * eps) - al * b * b * eps * mp * mp +
           ld(2) / 3 * al * b * mp * mp * mp;
}

}  // namespace

double f1(double eps, const ModelParams& pr) { return (double)f1_ld(eps, pr); }

double m_plus(double eps, const ModelParams& pr) {
    return (double)m_plus_ld(eps, pr);
}

double f_plus(double eps, const ModelParams& pr) {
    return (double)f_plus_ld(eps, pr);
}

CriticalPoint critical_pressure(const ModelParams& pr) {
    const ld es = eps_star(pr);
    // bracket the minimum: walk left from the branch point until f rises
    ld step = std::max<ld>(1e-4, -es * 1e-3);
    ld x1 = es, x2 = es - step;
    ld f2 = f_plus_ld(x2, pr);
    ld x3 = x2, f3 = f2;
    for (int i = 0; i < 200; ++i) {
        x3 = x2 - step;
        f3 = f_plus_ld(x3, pr);
        if (f3 > f2) break;
        x1 = x2;
        x2 = x3;
        f2 = f3;
        step *= 1.6;
    }
    if (!(f3 > f2))
        throw ConvergenceError("critical_pressure: failed to bracket the minimum");
    // golden-section on [x3, x1]
    ld lo = x3, hi = x1;
    const ld invphi = (std::sqrt((ld)5) - 1) / 2;
    ld a_ = hi - invphi * (hi - lo);
    ld b_ = lo + invphi * (hi - lo);
    ld fa = f_plus_ld(a_, pr), fb = f_plus_ld(b_, pr);
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max<ld>(1, -lo); ++i) {
        if (fa < fb) {
            hi = b_;
            b_ = a_;
            fb = fa;
            a_ = hi - invphi * (hi - lo);
            fa = f_plus_ld(a_, pr);
        } else {
            lo = a_;
            a_ = b_;
            fa = fb;
            b_ = lo + invphi * (hi - lo);
            fb = f_plus_ld(b_, pr);
        }
    }
    const ld ec = (lo + hi) / 2;
    return {(double)f_plus_ld(ec, pr), (double)ec};
}

PhasePoint standard_phase(double p, const ModelParams& pr) {
    if (p < 0) throw DomainError("standard_phase: p must be >= 0");
    if (p == 0.0) return {0.0, 0.0};
    // f1 is strictly decreasing in eps for eps <= 0; bracket then bisect
    ld lo = 0.0, hi = 0.0;  // f1(lo) <= p <= f1(hi), hi < lo
    ld width = 0.1;
    while (f1_ld(-width, pr) < (ld)p) {
        width *= 2;
        if (width > 1e8) throw ConvergenceError("standard_phase: bracket failure");
    }
    hi = -width;
    for (int i = 0; i < 200; ++i) {
        const ld mid = (lo + hi) / 2;
        if (f1_ld(mid, pr) < (ld)p)
            lo = mid;
        else
            hi = mid;
    }
    // Newton polish
    ld e = (lo + hi) / 2;
    const ld b4 = (ld)pr.b * pr.b * pr.b * pr.b;
    for (int i = 0; i < 8; ++i) {
        const ld r = f1_ld(e, pr) - (ld)p;
        const ld drde = -1 - (ld)pr.alpha * b4 * e * e;
        e -= r / drde;
    }
    return {(double)((ld)pr.b * e), (double)e};
}

PhasePoint fluid_rich_phase(double p, const ModelParams& pr) {
    const CriticalPoint cp = critical_pressure(pr);
    if (p < cp.p_c)
        throw DomainError("fluid_rich_phase: p = " + std::to_string(p) +
                          " below critical pressure " + std::to_string(cp.p_c));
    // smallest-eps root: f_plus is increasing towards -inf on (-inf, eps_c]
    ld hi = cp.eps_c;  // f_plus(hi) = p_c <= p
    ld lo = cp.eps_c;
    ld step = 0.05;
    while (f_plus_ld(lo, pr) < (ld)p) {
        lo -= step;
        step *= 1.6;
        if (lo < -1e8) throw ConvergenceError("fluid_rich_phase: bracket failure");
    }
    for (int i = 0; i < 200; ++i) {
        const ld mid = (lo + hi) / 2;
        if (f_plus_ld(mid, pr) > (ld)p)
            lo = mid;
        else
            hi = mid;
    }
    const ld e = (lo + hi) / 2;
    return {(double)m_plus_ld(e, pr), (double)e};
}

double coexistence_pressure(const ModelParams& pr, double p_hi_factor) {
    const CriticalPoint cp = critical_pressure(pr);
    auto g = [&](ld p) -> ld {
        ModelParams q = pr;
        q.p = (double)p;
        const PhasePoint s = standard_phase(q.p, pr);
        const PhasePoint f = fluid_rich_phase(q.p, pr);
        return psi_total(s.m, s.eps, q) - psi_total(f.m, f.eps, q);
    };
    ld lo = (ld)cp.p_c * (1 + 1e-9);
    ld hi = (ld)cp.p_c * (ld)p_hi_factor;
    ld glo = g(lo);
    if (!(glo * g(hi) < 0))
        throw ConvergenceError(
            "coexistence_pressure: no sign change up to p_hi = " +
            std::to_string((double)hi));
    for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
        const ld mid = (lo + hi) / 2;
        const ld gmid = g(mid);
        if (glo * gmid <= 0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gmid;
        }
    }
    return (double)((lo + hi) / 2);
}

PhaseDiagramPoint phase_diagram_point(double p, const ModelParams& pr) {
    PhaseDiagramPoint out;
    out.p = p;
    out.standard = standard_phase(p, pr);
    const CriticalPoint cp = critical_pressure(pr);
    if (p >= cp.p_c) out.fluid_rich = fluid_rich_phase(p, pr);
    return out;
}

}  // namespace poroflow
